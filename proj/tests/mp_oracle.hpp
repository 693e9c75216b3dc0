#pragma once
// Independent 50-digit re-evaluation of the closed-form error sub-terms.
#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "zfr/error_budget.hpp"
#include "zfr/optimizer.hpp"
#include "zfr/reference.hpp"
#include "zfr/special_functions.hpp"

namespace oracle {

using mp = boost::multiprecision::cpp_dec_float_50;

inline mp pi() { return boost::math::constants::pi<mp>(); }
inline mp psi(const mp& x) { return boost::math::digamma(x); }

struct Inputs {
    mp theta, sigma0, eta0, omega0, kappa, delta, r, q0, Y0, alpha, M;
    long t0 = 1;
    bool strict = false;
};

inline mp h0(const mp& th) {
    const mp T = tan(th), s = 1 + T * T;
    return s * (3 - th * T - 3 * th / T);
}

inline mp m_theta(const mp& th) {
    const mp T = tan(th), s = 1 + T * T;
    return abs(s * (s * th * T - T * T));
}

inline mp zeta2_tail(long t0) {
    mp partial = 0;
    for (long n = 1; n < t0; ++n) partial += mp(1) / (mp(n) * n);
    return pi() * pi() / 6 - partial;
}

inline mp log_zeta2_tail(long t0) {
    const long N = t0 + 4000;
    mp s = 0;
    for (long n = t0; n < N; ++n) s += log(mp(n)) / (mp(n) * n);
    const mp x = N, lx = log(x);
    const mp f = lx / (x * x), f1 = (1 - 2 * lx) / (x * x * x), f3 = (26 - 24 * lx) / pow(x, 5);
    return s + (lx + 1) / x + f / 2 - f1 / 12 + f3 / 720;
}

struct Weights {
    mp w1, w2;
};

inline Weights weights(long t0) {
    static std::map<long, Weights> cache;
    if (auto it = cache.find(t0); it != cache.end()) return it->second;
    const mp c1("0.91845"), c2("5.36927");
    const mp z = zeta2_tail(t0), zl = log_zeta2_tail(t0);
    const mp lead = c1 + 1 / (2 * pi());
    Weights w{lead * z, lead * zl + (2 * (c1 * log(mp(2)) + c2) - log(pi()) / pi()) * z};
    cache.emplace(t0, w);
    return w;
}

inline mp s0w(int k, const Inputs& in) {
    const Weights w = weights(in.t0);
    const mp L = log(in.q0 * in.Y0);
    if (k == 0) return 2 * w.w1 / in.r + w.w2 / (in.r * L);
    return w.w1 * log(in.q0 * in.q0 * (k * in.Y0 + 1)) / (in.r * L) + w.w2 / (in.r * L);
}

inline mp r1(const mp& x0, const mp& x1, const mp& y1, const mp& k, const mp& d) {
    const int l = 100;
    const mp y2 = y1 * y1;
    mp s = -boost::math::constants::euler<mp>() * (1 - k) -
           2 * (x0 / (x1 * x1 + y2) - k * (x1 + d) / ((x0 + d) * (x0 + d) + y2));
    for (int n = 1; n <= l; ++n) {
        const mp a = 2 * n + x1, b = 2 * n + x1 + d;
        s += mp(1) / n - (4 * n + 2 * x0) / (a * a + y2) - k * (mp(1) / n - (4 * n + 2 * x0 + 2 * d) / (b * b + y2));
    }
    const mp L = l;
    return s + 1 / L + 1 / (4 * L * L) - k * ((1 + d) / L + (17 + 18 * d) / (8 * L * L));
}

inline mp r2(const mp& x1, const mp& y1, const mp& k, const mp& d) {
    return (1 - k) / 2 * log((x1 + d) * (x1 + d) / (y1 * y1) + 1) + atan(y1 / x1) / y1 + k * atan(y1 / (x1 + d)) / y1;
}

inline mp r3(const mp& x0, const mp& x1, const mp& y1, const mp& k, const mp& d) {
    return (1 / (3 * y1)) * (1 / x0 + k / (x0 + d)) + (x1 * x1 + k * (x1 + d) * (x1 + d)) / (2 * y1 * y1);
}

// name -> value; cubic coefficients are reported per power.
inline std::map<std::string, mp> terms(const Inputs& in) {
    std::map<std::string, mp> out;
    const mp H = h0(in.theta), m = m_theta(in.theta);
    const mp k = in.kappa, d = in.delta, s = in.sigma0, e = in.eta0;
    const mp x = s - e + d;
    out["s1.c1"] = -(1 - k * (1 / d + 1 / x)) * H;
    out["s1.c3"] = -(1 - k * (1 / (d * d * d) + 1 / (x * x * x))) * m;
    {
        const mp a = s - 1 + d, c = s - mp("0.5") + d, al = in.alpha;
        out["s1p.c1"] = H * (-(s - mp("0.5")) / (1 + al * al * e * e) + k / a + k / c);
        out["s1p.c3"] = -m * (1 / (s - mp("0.5")) + k / (a * a * a) + k / (c * c * c));
    }
    for (int j = 0; j <= 4; ++j) {
        const mp w = s0w(j, in);
        out["s2[" + std::to_string(j) + "].c1"] = in.M * w;
        out["s2[" + std::to_string(j) + "].c2"] = (1 + 2 * k) * m / (s - mp("0.5")) * w;
    }
    {
        const mp a = s - 1 + d;
        out["p0.c1"] = -H * k / d;
        out["p0.c3"] = m * k / (a * a * a);
    }
    const mp lp = -(1 - k) / 2 * log(pi());
    out["v0"] = lp + psi(mp("1.5")) / 2 - k / 2 * psi((s + d) / 2 + 1);
    out["v2"] = lp + psi(mp(1)) / 2 - k / 2 * psi((s + d) / 2);
    for (int j = 1; j <= 4; ++j) {
        const std::string id = "[" + std::to_string(j) + "]";
        out["v1" + id] = lp + r1(s + 2, mp(3), mp(j), k, d) / 2;
        const mp y1 = j * in.Y0;
        const mp rr = std::min(r2(mp(2), y1, k, d), r3(s, mp(2), y1, k, d));
        out["v3" + id] = (1 - k) / 2 * log(mp(j) / (2 * pi())) + rr / 2;
        out["v4" + id] = lp + r1(s, mp(2), mp(j), k, d) / 2;
    }
    const mp L = in.strict ? mp(log(in.q0)) : mp(log(in.q0 * in.Y0));
    const mp p1("4.803"), p2("1.292");
    auto w1 = [&](const mp& t) { return m / (t * t * t); };
    auto w2 = [&](const mp& t) { return m / (t * in.Y0 * in.Y0); };
    auto w3 = [&](const mp& t) { return p1 * m / (in.r * L * pi() * t) * (1 / (t * t) + 1); };
    auto w4 = [&](const mp& t) { return p2 * m / (in.r * L * pi() * t) * (1 / (t * t) + 1); };
    const mp x0 = s, x1 = s + d;
    out["w0.c2"] = w3(x0) + k * w3(x1);
    out["w0.c3"] = w1(x0) + k * w1(x1);
    out["w5.c2"] = w3(x0) + k * w3(x1);
    out["w5.c3"] = w1(x0) / 2 + k * w1(x1) / 2;
    out["w6.c2"] = w4(x0) + k * w4(x1);
    out["w6.c3"] = w2(x0) / 2 + k * w2(x1) / 2;
    return out;
}

// The same quantities from the double-precision library.
inline std::map<std::string, double> library_terms(const zfr::BudgetInputs& b) {
    std::map<std::string, double> out;
    const zfr::Coeffs s1 = zfr::s1_term(b);
    out["s1.c1"] = s1.c1;
    out["s1.c3"] = s1.c3;
    if (b.alpha * b.tf->d1() < zfr::kPi) {
        const zfr::Coeffs s1p = zfr::s1_prime_term(b);
        out["s1p.c1"] = s1p.c1;
        out["s1p.c3"] = s1p.c3;
    }
    for (int j = 0; j <= 4; ++j) {
        const zfr::Coeffs c = zfr::s2_term(b, j);
        out["s2[" + std::to_string(j) + "].c1"] = c.c1;
        out["s2[" + std::to_string(j) + "].c2"] = c.c2;
    }
    const zfr::Coeffs p0 = zfr::p0_term(b);
    out["p0.c1"] = p0.c1;
    out["p0.c3"] = p0.c3;
    const zfr::VTerms v = zfr::v_terms(b);
    out["v0"] = v.v0;
    out["v2"] = v.v2;
    for (int j = 1; j <= 4; ++j) {
        const std::string id = "[" + std::to_string(j) + "]";
        out["v1" + id] = v.v1[j];
        out["v3" + id] = v.v3[j];
        out["v4" + id] = v.v4[j];
    }
    const zfr::WTerms w = zfr::w_terms(b);
    out["w0.c2"] = w.w0.c2;
    out["w0.c3"] = w.w0.c3;
    out["w5.c2"] = w.w5.c2;
    out["w5.c3"] = w.w5.c3;
    out["w6.c2"] = w.w6.c2;
    out["w6.c3"] = w.w6.c3;
    return out;
}

inline Inputs from_budget(const zfr::BudgetInputs& b) {
    Inputs in;
    in.theta = b.tf->theta();
    in.sigma0 = b.sigma0;
    in.eta0 = b.eta0;
    in.omega0 = b.omega0;
    in.kappa = b.kappa;
    in.delta = b.delta;
    in.r = b.r;
    in.q0 = b.q0;
    in.Y0 = b.Y0;
    in.alpha = b.alpha;
    in.M = b.kernel();
    in.t0 = b.t0;
    in.strict = b.options.strict_paper_mode;
    return in;
}

struct Mismatch {
    std::string row, term;
    double library = 0.0, reference = 0.0, rel = 0.0;
};

struct Comparison {
    int compared = 0;
    double worst_rel = 0.0;
    std::string worst_term;
    std::vector<Mismatch> failures;
};

// Relative error against the oracle; terms with |oracle| < 1e-300 compare absolutely.
inline void compare_into(Comparison& cmp, const std::string& row, const zfr::BudgetInputs& b, double tol) {
    const auto lib = library_terms(b);
    const auto ref = terms(from_budget(b));
    for (const auto& [name, value] : lib) {
        const double o = static_cast<double>(ref.at(name));
        const double rel = std::abs(o) > 1e-300 ? std::abs(value - o) / std::abs(o) : std::abs(value - o);
        ++cmp.compared;
        if (rel > cmp.worst_rel) {
            cmp.worst_rel = rel;
            cmp.worst_term = row + " " + name;
        }
        if (!(rel <= tol)) cmp.failures.push_back({row, name, value, o, rel});
    }
}

// Every printed row, evaluated at its printed (theta, t0, r, R).
inline Comparison compare_reference_rows(double tol, bool strict = false) {
    Comparison cmp;
    for (const auto& row : zfr::reference_table()) {
        const zfr::CaseConfig c = zfr::case_config(zfr::parse_case_id(row.case_name));
        const zfr::ThetaFunction tf(row.num("theta"));
        const long t0 = static_cast<long>(row.num("t0"));
        const double r = row.num("r"), R = row.num("R");
        const double M = tf.kernel_M(-r / R);
        const zfr::ParameterPoint p = zfr::derive_point(c, tf, t0, r, R, M);
        zfr::BudgetOptions opts;
        opts.strict_paper_mode = strict;
        const zfr::BudgetInputs b = zfr::budget_inputs(c, tf, p, opts, M);
        compare_into(cmp, row.case_name + "#" + std::to_string(row.step), b, tol);
    }
    return cmp;
}

}  // namespace oracle
