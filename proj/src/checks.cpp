#include "zfr/checks.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "zfr/reference.hpp"
#include "zfr/special_functions.hpp"
#include "zfr/stechkin.hpp"
#include "zfr/trig_polynomials.hpp"
#include "zfr/zero_density.hpp"

namespace zfr {
namespace {
const double kSampleThetas[] = {1.661, 1.750, 1.8552, 1.9476};

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}
}  // namespace

CheckResult check_laplace_nonnegative(const QuadratureConfig& q) {
    double worst = INFINITY;
    for (double th : kSampleThetas) {
        const ThetaFunction tf(th, q);
        for (int X = 0; X <= 10; ++X)
            for (int Y = -20; Y <= 20; ++Y) worst = std::min(worst, tf.laplace_f_tilde(X, Y));
    }
    return {"laplace transform nonnegative for X >= 0", worst >= -q.abs_tol, "min " + fmt(worst)};
}

CheckResult check_boundary_conditions(const QuadratureConfig& q) {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> dist(kPi / 2 + 0.05, kPi - 0.05);
    double worst = 0.0, worst_theta = 0.0;
    bool max_at_zero = true;
    for (int i = 0; i < 50; ++i) {
        const ThetaFunction tf(dist(rng), q);
        const double d = tf.d1();
        // Normalized by the function scale.
        const double vals[] = {tf.h(d) / tf.h0(), tf.h_prime(0.0) / tf.h0(), tf.h_prime(d) / tf.h0(),
                               tf.h_second(d) / tf.m_theta(), (tf.h(0.0) - tf.h0()) / tf.h0()};
        for (double v : vals)
            if (std::abs(v) > worst) {
                worst = std::abs(v);
                worst_theta = tf.theta();
            }
        for (int k = 0; k <= 2000; ++k)
            if (std::abs(tf.h_second(std::min(d, d * k / 2000))) > tf.m_theta() * (1 + 1e-12)) max_at_zero = false;
    }
    return {"h boundary conditions", worst <= 1e-9 && max_at_zero,
            "max relative residual " + fmt(worst) + " at theta=" + fmt(worst_theta) +
                (max_at_zero ? ", |h''| maximal at 0" : ", |h''| exceeds m_theta")};
}

CheckResult check_h_bounds(const QuadratureConfig& q) {
    const double eta = 0.03;
    double worst_ratio = 0.0;
    for (double th : {1.750, 1.8552}) {
        const ThetaFunction tf(th, q);
        for (int i = 1; i <= 20; ++i) {
            const double x = 0.05 * i;
            const double M = tf.kernel_M(x / eta);
            for (int j = 1; j <= 20; ++j) {
                const double y = 0.5 * j;
                const double s2 = x * x + y * y;
                const double H = tf.laplace_f_tilde(x / eta, y / eta) - tf.h0() * eta * x / s2;
                const double b1 = M * eta * eta / s2;
                const double b2 = tf.m_theta() * eta * eta * eta / (x * s2);
                worst_ratio = std::max(worst_ratio, std::abs(H) / std::min(b1, b2));
            }
        }
    }
    return {"|H| bounds on the 20x20 grid", worst_ratio <= 1.0 + 1e-9, "max |H|/bound " + fmt(worst_ratio)};
}

CheckResult check_laplace_identity(const QuadratureConfig& q) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> re(0.05, 5.0), im(-20.0, 20.0), th(kPi / 2 + 0.1, kPi - 0.3);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const ThetaFunction tf(th(rng), q);
        const std::complex<double> s(re(rng), im(rng));
        const auto F = tf.laplace(s, 0), F2 = tf.laplace(s, 2);
        const auto rhs = tf.h0() / s + F2 / (s * s);
        worst = std::max(worst, std::abs(F - rhs) / std::max(1.0, std::abs(F)));
    }
    return {"Laplace identity F = f(0)/s + F2/s^2", worst <= 1e-8, "max relative gap " + fmt(worst)};
}

CheckResult check_trig_polynomials() {
    bool ok = true;
    std::string detail;
    for (const auto& p : {p1(), p2(), p3(), p4()}) {
        const auto rep = certify_nonnegative(p);
        ok = ok && rep.passed;
        detail += rep.message + "; ";
    }
    ok = ok && sigma5_product_nonnegative();
    return {"P1-P4 nonnegative, factored forms agree", ok, detail};
}

CheckResult check_stechkin_lemma(int samples) {
    std::mt19937_64 rng(1970);
    std::uniform_real_distribution<double> beta(0.5, 1.0), y(1e-3, 100.0), sigma(1.0 + 1e-6, 5.0);
    int sym_fail = 0, verb_fail = 0;
    for (int i = 0; i < samples; ++i) {
        const double b = beta(rng), yy = y(rng), s = sigma(rng);
        if (!stechkin_inequality_check(b, yy, s, StechkinForm::symmetric)) ++sym_fail;
        if (!stechkin_inequality_check(b, yy, s, StechkinForm::verbatim)) ++verb_fail;
    }
    return {"Stechkin inequality on random triples", sym_fail == 0,
            std::to_string(samples) + " triples: symmetric form " + std::to_string(sym_fail) +
                " failures; repeated-denominator form " + std::to_string(verb_fail) + " failures"};
}

CheckResult check_digamma_u_bound() {
    double worst = -INFINITY;
    for (int a = 0; a <= 1; ++a)
        for (int i = 0; i <= 200; ++i) {
            const double T = 0.5 * i;
            worst = std::max(worst, std::abs(re_digamma_half(a + 0.5, T)) - u_bound(T));
        }
    return {"|Re psi| <= U(T)", worst <= 0.0, "max |Re psi| - U " + fmt(worst)};
}

CheckResult check_tail_monotone() {
    bool ok = true;
    TailWeights prev = tail_weights(1);
    for (long t0 = 2; t0 <= 1000; ++t0) {
        const TailWeights w = tail_weights(t0);
        if (!(w.w1 < prev.w1 && w.w2 < prev.w2 && w.w1 > 0 && w.w2 > 0)) ok = false;
        prev = w;
    }
    return {"w1, w2 positive and strictly decreasing in t0", ok, "t0 = 1..1000"};
}

CheckResult check_fixed_point_residual(const OptimizerOptions& opts) {
    bool ok = true;
    std::string detail;
    for (CaseId id : all_case_ids()) {
        const CaseConfig c = case_config(id);
        const ReferenceRow& ref = reference_final(c.name);
        const ThetaFunction tf(ref.num("theta"), opts.quadrature);
        try {
            const RSolution s = solve_r(c, tf, ref.num("R"), opts);
            const double res = s.R0 - s.r;
            const bool pass = res > 0.0 && res <= 1e-3 + 1e-12;
            ok = ok && pass;
            detail += c.name + " " + fmt(res) + (pass ? "" : "(!)") + "; ";
        } catch (const std::exception& e) {
            ok = false;
            detail += c.name + " error: " + e.what() + "; ";
        }
    }
    return {"fixed-point residual 0 < R0 - r <= 1e-3", ok, detail};
}

std::vector<CheckResult> run_property_suite(const OptimizerOptions& opts) {
    const QuadratureConfig& q = opts.quadrature;
    return {check_laplace_nonnegative(q), check_boundary_conditions(q), check_h_bounds(q),
            check_laplace_identity(q),    check_trig_polynomials(),     check_stechkin_lemma(),
            check_digamma_u_bound(),      check_tail_monotone(),        check_fixed_point_residual(opts)};
}

}  // namespace zfr
