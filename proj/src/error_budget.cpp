#include "zfr/error_budget.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zfr/special_functions.hpp"

namespace zfr {

void BudgetInputs::validate() const {
    std::ostringstream os;
    if (tf == nullptr) os << "missing test function";
    else if (!(eta0 > 0.0)) os << "eta0 must be positive";
    else if (!(2.0 * sigma0 - 1.0 > 0.0)) os << "need 2 sigma0 - 1 > 0";
    else if (!(kappa >= 0.0 && kappa <= sigma0 / (sigma0 + delta))) os << "need kappa <= sigma0/(sigma0+delta)";
    if (!os.str().empty()) throw PreconditionError("budget inputs: " + os.str());
}

Coeffs s1_term(const BudgetInputs& b) {
    const double k = b.kappa, d = b.delta, x = b.sigma0 - b.eta0 + d;
    return {-(1.0 - k * (1.0 / d + 1.0 / x)) * b.h0(), 0.0,
            -(1.0 - k * (1.0 / (d * d * d) + 1.0 / (x * x * x))) * b.m()};
}

Coeffs s1_prime_term(const BudgetInputs& b) {
    if (!(b.alpha * b.tf->d1() < kPi)) {
        std::ostringstream os;
        os << "s1': need alpha*d1 < pi (alpha=" << b.alpha << ", d1=" << b.tf->d1() << ")";
        throw PreconditionError(os.str());
    }
    const double k = b.kappa, d = b.delta, s = b.sigma0, al = b.alpha, e = b.eta0;
    const double a = s - 1.0 + d, c = s - 0.5 + d;
    return {b.h0() * (-(s - 0.5) / (1.0 + al * al * e * e) + k / a + k / c), 0.0,
            -b.m() * (1.0 / (s - 0.5) + k / (a * a * a) + k / (c * c * c))};
}

Coeffs s2_term(const BudgetInputs& b, int k, const TailWeights& w) {
    if (std::isfinite(b.kappa_q) && b.kappa > b.kappa_q + 1e-15)
        throw PreconditionError("s2: need kappa <= kappa_q");
    if (std::isfinite(b.delta_q) && b.delta < b.delta_q - 1e-15)
        throw PreconditionError("s2: need delta >= delta_q");
    const double s0w = s0_weight(k, w, b.r, b.q0, b.Y0);
    return {b.kernel() * s0w, (1.0 + 2.0 * b.kappa) * b.m() / (b.sigma0 - 0.5) * s0w, 0.0};
}

Coeffs s2_term(const BudgetInputs& b, int k) {
    return s2_term(b, k, tail_weights(b.t0, b.options.w2_constant));
}

Coeffs p0_term(const BudgetInputs& b) {
    const double a = b.sigma0 - 1.0 + b.delta;
    if (!(a > 0.0)) throw PreconditionError("p0: need delta > 1 - sigma0");
    return {-b.h0() * b.kappa / b.delta, 0.0, b.m() * b.kappa / (a * a * a)};
}

double alpha_threshold(const BudgetInputs& b, int k) {
    if (k < 1) throw PreconditionError("alpha_threshold: k must be >= 1");
    const double rad = 2.0 * b.r * b.kernel() / ((1.0 - b.kappa) * b.h0()) - b.omega0 * b.omega0;
    return rad > 0.0 ? std::sqrt(rad) / k : 0.0;
}

VTerms v_terms(const BudgetInputs& b) {
    const double k = b.kappa, d = b.delta, s = b.sigma0;
    const double lp = -(1.0 - k) / 2.0 * std::log(kPi);
    VTerms v;
    v.v0 = lp + digamma_real(1.5) / 2.0 - k / 2.0 * digamma_real((s + d) / 2.0 + 1.0);
    v.v2 = lp + digamma_real(1.0) / 2.0 - k / 2.0 * digamma_real((s + d) / 2.0);
    for (int j = 1; j <= 4; ++j) {
        v.v1[j] = lp + delta_r1(s + 2.0, 3.0, j, k, d) / 2.0;
        v.v3[j] = (1.0 - k) / 2.0 * std::log(j / (2.0 * kPi)) +
                  delta_bound(DeltaRegime::large_y, s, 2.0, j * b.Y0, k, d) / 2.0;
        v.v4[j] = lp + delta_r1(s, 2.0, j, k, d) / 2.0;
    }
    return v;
}

namespace {
double w_log(const BudgetInputs& b) {
    return b.options.strict_paper_mode ? std::log(b.q0) : std::log(b.q0 * b.Y0);
}
}  // namespace

Coeffs w1_sub(const BudgetInputs& b, double x) { return {0.0, 0.0, b.m() / (x * x * x)}; }
Coeffs w2_sub(const BudgetInputs& b, double x) { return {0.0, 0.0, b.m() / (x * b.Y0 * b.Y0)}; }
Coeffs w3_sub(const BudgetInputs& b, double x) {
    return {0.0, kP1 * b.m() / (b.r * w_log(b) * kPi * x) * (1.0 / (x * x) + 1.0), 0.0};
}
Coeffs w4_sub(const BudgetInputs& b, double x) {
    return {0.0, kP2 * b.m() / (b.r * w_log(b) * kPi * x) * (1.0 / (x * x) + 1.0), 0.0};
}

WTerms w_terms(const BudgetInputs& b) {
    const double x0 = b.sigma0, x1 = b.sigma0 + b.delta, k = b.kappa;
    WTerms w;
    w.w0 = w1_sub(b, x0) + w3_sub(b, x0) + k * (w1_sub(b, x1) + w3_sub(b, x1));
    w.w5 = 0.5 * w1_sub(b, x0) + w3_sub(b, x0) + k * (0.5 * w1_sub(b, x1) + w3_sub(b, x1));
    w.w6 = 0.5 * w2_sub(b, x0) + w4_sub(b, x0) + k * (0.5 * w2_sub(b, x1) + w4_sub(b, x1));
    return w;
}

BudgetBreakdown assemble_breakdown(const CaseConfig& c, const BudgetInputs& in) {
    in.validate();
    BudgetInputs b = in;
    if (!b.kernel_cache) b.kernel_cache = b.tf->kernel_M(-b.r / b.R);
    const TailWeights tw = tail_weights(b.t0, b.options.w2_constant);
    const VTerms v = v_terms(b);
    const WTerms w = w_terms(b);
    const Coeffs p0 = p0_term(b);

    BudgetBreakdown out;
    double vs = 0.0;
    if (c.family == CaseFamily::I || c.family == CaseFamily::II) {
        const auto& a = c.trig->coefficients;
        const double A = c.trig->tail_sum();
        out.S = a[1] * s1_term(b);
        for (int k = 0; k <= 4; ++k) out.S += a[k] * s2_term(b, k, tw);
        out.P = a[0] * p0;
        vs = a[0] * v.v0;
        if (c.family == CaseFamily::I) {
            for (int k = 1; k <= 4; ++k) vs += a[k] * (c.v_family == VFamily::v3 ? v.v3[k] : v.v4[k]);
            out.W = a[0] * w.w0 + A * (c.w_family == WFamily::w6 ? w.w6 : w.w5);
        } else {
            double principal = 0.0, other = 0.0;
            for (int k = 1; k <= 4; ++k) {
                const bool is_p = std::find(c.principal_k.begin(), c.principal_k.end(), k) != c.principal_k.end();
                vs += a[k] * (is_p ? v.v1[k] : v.v4[k]);
                (is_p ? principal : other) += a[k];
            }
            out.W = (a[0] + principal) * w.w0 + other * w.w5;
        }
    } else if (c.family == CaseFamily::III) {
        const int n = c.multiplicity;
        out.S = 2.0 * s1_prime_term(b) + double(n + 1) * s2_term(b, 0, tw);
        out.P = p0;
        vs = v.v0 + n * v.v2;
        out.W = w.w0 + double(n) * w.w5;
    } else if (c.family == CaseFamily::IV) {
        const int n = c.multiplicity;
        out.S = 2.0 * s1_term(b) + double(n == 1 ? 2 : 4) * s2_term(b, 0, tw);
        out.P = p0;
        vs = v.v0 + n * v.v2;
        out.W = w.w0 + double(n) * w.w5;
    } else {
        throw ConfigError("assemble_cubic: unknown case family");
    }
    out.V = {vs * b.h0(), 0.0, 0.0};
    const Coeffs t = out.S + out.P + out.V + out.W;
    out.total = {t.c1, t.c2, t.c3};
    return out;
}

ErrorCubic assemble_cubic(const CaseConfig& c, const BudgetInputs& b) { return assemble_breakdown(c, b).total; }

}  // namespace zfr
