#pragma once

#include <functional>
#include <string>
#include <vector>

namespace zfr {

struct CosinePolynomial {
    std::string name;
    std::vector<double> coefficients;  // a_0 .. a_d
    std::string factored_description;
    std::function<double(double)> factored;  // may be empty

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    // sum_{k>=1} a_k
    double tail_sum() const;
};

double evaluate(const CosinePolynomial& p, double y);

struct CertificationReport {
    bool passed = false;
    double grid_min = 0.0;
    double argmin = 0.0;
    double max_factored_gap = 0.0;
    double witness = 0.0;  // a violating y when !passed
    std::string message;
};

CertificationReport certify_nonnegative(const CosinePolynomial& p, int grid_points = 100000);

// 8(0.91+c)^2(0.265+c)^2, c = cos y
CosinePolynomial p1();
// 4cos^2 y (1 + cos y)
CosinePolynomial p2();
// (1 + cos y)(1 + 2cos y)^2
CosinePolynomial p3();
// 1 + cos y
CosinePolynomial p4();

// Cosine-series coefficients of a polynomial in c = cos y (ascending powers).
std::vector<double> chebyshev_expand(const std::vector<double>& power_coeffs);

// (1 + Re chi_1)(1 + Re chi_2) >= 0 for unimodular character values; grid check.
bool sigma5_product_nonnegative(int grid_points = 360);

}  // namespace zfr
