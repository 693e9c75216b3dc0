#pragma once

#include <array>
#include <limits>
#include <optional>

#include "zfr/cases.hpp"
#include "zfr/test_function.hpp"
#include "zfr/zero_density.hpp"

namespace zfr {

// Coefficients of eta, eta^2, eta^3.
struct Coeffs {
    double c1 = 0.0, c2 = 0.0, c3 = 0.0;

    Coeffs& operator+=(const Coeffs& o) {
        c1 += o.c1;
        c2 += o.c2;
        c3 += o.c3;
        return *this;
    }
    friend Coeffs operator+(Coeffs a, const Coeffs& b) { return a += b; }
    friend Coeffs operator*(double s, const Coeffs& a) { return {s * a.c1, s * a.c2, s * a.c3}; }
    double eval(double eta) const { return eta * (c1 + eta * (c2 + eta * c3)); }
};

struct ErrorCubic {
    double alpha1 = 0.0, alpha2 = 0.0, alpha3 = 0.0;

    double eval(double eta) const { return eta * (alpha1 + eta * (alpha2 + eta * alpha3)); }
    bool negative_at(double eta) const { return eval(eta) < 0.0; }
};

struct BudgetOptions {
    bool strict_paper_mode = false;  // w3/w4 divide by r log(q0) instead of r log(q0 Y0)
    W2Constant w2_constant = W2Constant::log_pi_over_pi;
};

struct BudgetInputs {
    const ThetaFunction* tf = nullptr;
    double sigma0 = 0.0, eta0 = 0.0, omega0 = 0.0;
    double kappa = 0.0, delta = 0.0;
    long t0 = 1;
    double r = 0.0, R = 0.0;
    double q0 = 0.0, Y0 = 1.0;
    double alpha = 0.0;
    // Solver outputs; s2 checks kappa <= kappa_q, delta >= delta_q when set.
    double kappa_q = std::numeric_limits<double>::quiet_NaN();
    double delta_q = std::numeric_limits<double>::quiet_NaN();
    BudgetOptions options;
    // M(-r/R), filled lazily by callers that reuse it.
    std::optional<double> kernel_cache;

    double h0() const { return tf->h0(); }
    double m() const { return tf->m_theta(); }
    double kernel() const { return kernel_cache ? *kernel_cache : tf->kernel_M(-r / R); }
    void validate() const;
};

Coeffs s1_term(const BudgetInputs& b);
Coeffs s1_prime_term(const BudgetInputs& b);
Coeffs s2_term(const BudgetInputs& b, int k);
Coeffs s2_term(const BudgetInputs& b, int k, const TailWeights& w);
Coeffs p0_term(const BudgetInputs& b);
double alpha_threshold(const BudgetInputs& b, int k);

struct VTerms {
    double v0 = 0.0, v2 = 0.0;
    std::array<double, 5> v1{}, v3{}, v4{};  // index k = 1..4
};
VTerms v_terms(const BudgetInputs& b);

struct WTerms {
    Coeffs w0, w5, w6;
};
// Sub-terms at abscissa x: w1 = m eta^3/x^3, w2 = m eta^3/(x Y0^2), w3/w4 carry p1/p2.
Coeffs w1_sub(const BudgetInputs& b, double x);
Coeffs w2_sub(const BudgetInputs& b, double x);
Coeffs w3_sub(const BudgetInputs& b, double x);
Coeffs w4_sub(const BudgetInputs& b, double x);
WTerms w_terms(const BudgetInputs& b);

inline constexpr double kP1 = 4.803;
inline constexpr double kP2 = 1.292;

struct BudgetBreakdown {
    Coeffs S, P, V, W;
    ErrorCubic total;
};

BudgetBreakdown assemble_breakdown(const CaseConfig& c, const BudgetInputs& b);
ErrorCubic assemble_cubic(const CaseConfig& c, const BudgetInputs& b);

}  // namespace zfr
