#pragma once

#include <stdexcept>

namespace zfr {

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StechkinParams {
    double delta_q = 0.0;
    double kappa_q = 0.0;
    double sigma0 = 0.0;
    double eta0 = 0.0;
    double h0 = 0.0;
    double m_theta = 0.0;
};

double kappa2(double delta, double sigma0, double eta0, double h0, double m_theta);
double kappa3(double delta, double sigma0, double eta0, double h0, double m_theta);

// Bisection for kappa2 = kappa3 on delta in [0.3, 1].
StechkinParams solve_delta_kappa(double sigma0, double eta0, double h0, double m_theta);

// symmetric: shifted pair (tau-beta+iy, tau-1+beta+iy); verbatim: the repeated (tau-1+beta+iy).
enum class StechkinForm { symmetric, verbatim };

double stechkin_expression(double beta, double y, double sigma, StechkinForm form = StechkinForm::symmetric);
bool stechkin_inequality_check(double beta, double y, double sigma, StechkinForm form = StechkinForm::symmetric);

}  // namespace zfr
