#pragma once

#include <string>
#include <vector>

#include "zfr/optimizer.hpp"

namespace zfr {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

CheckResult check_laplace_nonnegative(const QuadratureConfig& q);
CheckResult check_boundary_conditions(const QuadratureConfig& q);
CheckResult check_h_bounds(const QuadratureConfig& q);
CheckResult check_laplace_identity(const QuadratureConfig& q);
CheckResult check_trig_polynomials();
CheckResult check_stechkin_lemma(int samples = 10000);
CheckResult check_digamma_u_bound();
CheckResult check_tail_monotone();
// solve_r at each case's final printed (theta, R).
CheckResult check_fixed_point_residual(const OptimizerOptions& opts);

std::vector<CheckResult> run_property_suite(const OptimizerOptions& opts = {});

}  // namespace zfr
