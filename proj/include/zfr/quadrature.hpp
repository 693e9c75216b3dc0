#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace zfr {

enum class QuadratureMethod { adaptive_gauss_legendre, adaptive_simpson };

struct QuadratureConfig {
    QuadratureMethod method = QuadratureMethod::adaptive_gauss_legendre;
    double abs_tol = 1e-11;
    // Relative floor; integrands of size 1e5 cannot reach 1e-11 absolute in double.
    double rel_tol = 1e-13;
    int max_subdivisions = 4000;
};

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions = 0;
};

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureConfig& cfg = {});

}  // namespace zfr
