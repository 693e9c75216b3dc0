#include "zfr/optimizer.hpp"

#include <cmath>
#include <future>
#include <limits>
#include <sstream>
#include <thread>

#include "zfr/special_functions.hpp"
#include "zfr/stechkin.hpp"

namespace zfr {

ParameterPoint derive_point(const CaseConfig& c, const ThetaFunction& tf, long t0, double r, double R,
                            std::optional<double> kernel) {
    if (t0 < 1 || !(r > 0.0) || !(r <= R)) throw PreconditionError("derive_point: need t0 >= 1 and 0 < r <= R");
    ParameterPoint p;
    p.theta = tf.theta();
    p.t0 = t0;
    p.r = r;
    p.R = R;
    p.eta0 = 1.0 / (r * std::log(c.q0 * c.Y0));
    const double one_minus_sigma = 1.0 / (R * std::log(c.q0 * (4.0 * c.Y0 + t0)));
    p.sigma0 = 1.0 - one_minus_sigma;
    p.omega0 = one_minus_sigma / p.eta0;
    const StechkinParams sp = solve_delta_kappa(p.sigma0, p.eta0, tf.h0(), tf.m_theta());
    p.kappa = sp.kappa_q;
    p.delta = sp.delta_q;
    if (c.alpha_source == AlphaSource::table_value) {
        p.alpha = c.alpha_table;
    } else if (c.alpha_source == AlphaSource::threshold_k) {
        BudgetInputs b = budget_inputs(c, tf, p, {}, kernel);
        p.alpha = alpha_threshold(b, c.threshold_k);
    }
    return p;
}

ParameterPoint derive_point(const CaseConfig& c, double theta, long t0, double r, double R,
                            const QuadratureConfig& quad) {
    const ThetaFunction tf(theta, quad);
    return derive_point(c, tf, t0, r, R);
}

BudgetInputs budget_inputs(const CaseConfig& c, const ThetaFunction& tf, const ParameterPoint& p,
                           const BudgetOptions& opts, std::optional<double> kernel) {
    BudgetInputs b;
    b.tf = &tf;
    b.sigma0 = p.sigma0;
    b.eta0 = p.eta0;
    b.omega0 = p.omega0;
    b.kappa = p.kappa;
    b.delta = p.delta;
    b.kappa_q = p.kappa;
    b.delta_q = p.delta;
    b.t0 = p.t0;
    b.r = p.r;
    b.R = p.R;
    b.q0 = c.q0;
    b.Y0 = c.Y0;
    b.alpha = p.alpha;
    b.options = opts;
    b.kernel_cache = kernel;
    return b;
}

double compute_r0(const CaseConfig& c, const ThetaFunction& tf, const ParameterPoint& p) {
    double a0 = 1.0, a1 = 2.0;
    if (c.trig) {
        a0 = c.trig->coefficients[0];
        a1 = c.trig->coefficients[1];
    }
    const double alpha = c.family == CaseFamily::III ? p.alpha : 0.0;
    const double den = tf.r0_denominator(a0, a1, p.omega0, alpha, c.denominator);
    return c.main_coeff * (1.0 - p.kappa) * tf.h0() / (2.0 * den);
}

CaseResult evaluate_row(const CaseConfig& c, const ThetaFunction& tf, long t0, double r, double R,
                        const BudgetOptions& opts) {
    const double kernel = tf.kernel_M(-r / R);
    CaseResult res;
    res.case_name = c.name;
    res.point = derive_point(c, tf, t0, r, R, kernel);
    res.e_eta0 = assemble_cubic(c, budget_inputs(c, tf, res.point, opts, kernel)).eval(res.point.eta0);
    res.R0 = compute_r0(c, tf, res.point);
    res.converged = res.R0 > r && res.R0 <= r + 1e-3;
    return res;
}

long minimal_t0(const CaseConfig& c, const ThetaFunction& tf, double r, double R, const OptimizerOptions& opts) {
    const double kernel = tf.kernel_M(-r / R);
    auto negative = [&](long t0) {
        const ParameterPoint p = derive_point(c, tf, t0, r, R, kernel);
        return assemble_cubic(c, budget_inputs(c, tf, p, opts.budget, kernel)).negative_at(p.eta0);
    };
    if (negative(1)) return 1;
    long lo = 1, hi = 2;
    while (!negative(hi)) {
        if (hi >= opts.t0_max) {
            std::ostringstream os;
            os << c.name << ": no t0 <= " << opts.t0_max << " gives e(eta0) < 0 at theta=" << tf.theta()
               << ", r=" << r << ", R=" << R;
            throw InfeasibleError(os.str());
        }
        lo = hi;
        hi = std::min(2 * hi, opts.t0_max);
    }
    while (hi - lo > 1) {
        const long mid = lo + (hi - lo) / 2;
        (negative(mid) ? hi : lo) = mid;
    }
    return hi;
}

namespace {

struct Trial {
    long t0;
    double R0;
};

Trial trial(const CaseConfig& c, const ThetaFunction& tf, double r, double R, const OptimizerOptions& opts) {
    const long t0 = minimal_t0(c, tf, r, R, opts);
    const ParameterPoint p = derive_point(c, tf, t0, r, R);
    return {t0, compute_r0(c, tf, p)};
}

}  // namespace

RSolution solve_r(const CaseConfig& c, const ThetaFunction& tf, double R, const OptimizerOptions& opts) {
    const double lo_bound = c.r_lower;
    if (!(R > lo_bound)) throw PreconditionError("solve_r: need R above the r bracket floor");

    // Fixed point of r -> R0(r); damped iteration, bisection fallback.
    double r = R;
    Trial t = trial(c, tf, r, R, opts);
    double root = std::numeric_limits<double>::quiet_NaN();
    if (t.R0 >= R) {
        root = R;
    } else {
        for (int it = 0; it < 40; ++it) {
            const double next = std::clamp(t.R0, lo_bound, R);
            if (std::abs(next - r) < 1e-7) {
                root = next;
                break;
            }
            r = it < 10 ? next : 0.5 * (r + next);
            t = trial(c, tf, r, R, opts);
        }
    }
    if (!std::isfinite(root)) {
        double a = lo_bound, b = R;
        const Trial ta = trial(c, tf, a, R, opts);
        if (ta.R0 <= a) {
            std::ostringstream os;
            os << c.name << ": R0(r) - r <= 0 already at r = " << a << " (R0=" << ta.R0 << ")";
            throw InfeasibleError(os.str());
        }
        while (b - a > 1e-7) {
            const double m = 0.5 * (a + b);
            (trial(c, tf, m, R, opts).R0 > m ? a : b) = m;
        }
        root = a;
    }

    // Snap to the 1e-3 grid: largest r with r < R0(r) <= r + 1e-3.
    RSolution best;
    double rs = std::floor(root * 1000.0 + 1e-9) / 1000.0;
    if (rs > R) rs = std::floor(R * 1000.0) / 1000.0;
    for (int attempt = 0; attempt < 40 && rs >= lo_bound; ++attempt) {
        const Trial ts = trial(c, tf, rs, R, opts);
        const double gap = ts.R0 - rs;
        if (gap > 0.0) {
            best = {rs, ts.R0, ts.t0, gap <= 1e-3 + 1e-12};
            if (best.converged) return best;
            const double up = std::round((rs + 1e-3) * 1000.0) / 1000.0;
            if (up > R) break;
            const Trial tu = trial(c, tf, up, R, opts);
            if (tu.R0 <= up) break;
            rs = up;
        } else {
            rs = std::round((rs - 1e-3) * 1000.0) / 1000.0;
        }
    }
    if (best.r == 0.0) {
        std::ostringstream os;
        os << c.name << ": no grid r with R0(r) > r near " << root;
        throw InfeasibleError(os.str());
    }
    // A t0 jump can skip the window on the grid; try off-grid r just below R0.
    for (int attempt = 0; attempt < 8 && !best.converged; ++attempt) {
        const double rt = best.R0 - 5e-4 * std::pow(0.5, attempt);
        if (rt <= best.r || rt > R) continue;
        const Trial tt = trial(c, tf, rt, R, opts);
        if (tt.R0 > rt) best = {rt, tt.R0, tt.t0, tt.R0 - rt <= 1e-3 + 1e-12};
    }
    return best;
}

ThetaSearchResult search_theta(const CaseConfig& c, double R, const OptimizerOptions& opts) {
    const unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    auto objective = [&](double theta) -> std::optional<RSolution> {
        try {
            const ThetaFunction tf(theta, opts.quadrature);
            const RSolution s = solve_r(c, tf, R, opts);
            if (c.alpha_source == AlphaSource::threshold_k &&
                derive_point(c, tf, s.t0, s.r, R).alpha > c.alpha_bound)
                return std::nullopt;
            return s;
        } catch (const InfeasibleError&) {
        } catch (const PreconditionError&) {
        } catch (const SolverError&) {
        } catch (const DomainError&) {
        } catch (const NumericError&) {
        }
        return std::nullopt;
    };
    auto evaluate_grid = [&](const std::vector<double>& grid) {
        std::vector<std::optional<RSolution>> out(grid.size());
        std::vector<std::future<void>> jobs;
        for (unsigned w = 0; w < threads; ++w)
            jobs.push_back(std::async(std::launch::async, [&, w] {
                for (std::size_t i = w; i < grid.size(); i += threads) out[i] = objective(grid[i]);
            }));
        for (auto& j : jobs) j.get();
        return out;
    };

    double lo = kPi / 2 + opts.theta_margin, hi = kPi - opts.theta_margin;
    ThetaSearchResult best{0.0, {}};
    bool found = false;
    for (double step : opts.theta_steps) {
        std::vector<double> grid;
        const double per_unit = std::round(1.0 / step);
        for (long k = static_cast<long>(std::ceil(lo * per_unit - 1e-9)); k <= static_cast<long>(std::floor(hi * per_unit + 1e-9)); ++k)
            grid.push_back(k / per_unit);
        const auto vals = evaluate_grid(grid);
        bool pass_found = false;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (!vals[i]) continue;
            if (!pass_found || vals[i]->R0 < best.solution.R0) {
                best = {grid[i], *vals[i]};
                pass_found = true;
            }
        }
        if (!pass_found) break;
        found = true;
        lo = std::max(kPi / 2 + opts.theta_margin, best.theta - step);
        hi = std::min(kPi - opts.theta_margin, best.theta + step);
    }
    if (!found) throw InfeasibleError(c.name + ": no feasible theta on the grid");
    return best;
}

std::vector<CaseResult> optimize_case(const CaseConfig& c, const OptimizerOptions& opts) {
    std::vector<CaseResult> rows;
    double R = opts.initial_R;
    for (int step = 1; step <= opts.max_outer_steps; ++step) {
        const ThetaSearchResult ts = search_theta(c, R, opts);
        const ThetaFunction tf(ts.theta, opts.quadrature);
        CaseResult row = evaluate_row(c, tf, ts.solution.t0, ts.solution.r, R, opts.budget);
        row.step = step;
        row.converged = ts.solution.converged;
        rows.push_back(row);
        if (!c.iterate_R) break;
        if (rows.size() >= 2 && std::abs(rows.back().R0 - rows[rows.size() - 2].R0) <= opts.outer_tolerance) break;
        if (row.R0 <= c.r_lower) break;
        R = row.R0;
    }
    return rows;
}

CaseResult run_pinned(const CaseConfig& c, const Pin& pin, const OptimizerOptions& opts) {
    const double R = pin.R.value_or(opts.initial_R);
    double theta;
    if (pin.theta) {
        theta = *pin.theta;
    } else {
        theta = search_theta(c, R, opts).theta;
    }
    const ThetaFunction tf(theta, opts.quadrature);
    double r;
    long t0;
    if (pin.r) {
        r = *pin.r;
        t0 = pin.t0 ? *pin.t0 : minimal_t0(c, tf, r, R, opts);
    } else {
        const RSolution s = solve_r(c, tf, R, opts);
        r = s.r;
        t0 = pin.t0 ? *pin.t0 : s.t0;
    }
    CaseResult row = evaluate_row(c, tf, t0, r, R, opts.budget);
    row.step = 1;
    return row;
}

}  // namespace zfr
