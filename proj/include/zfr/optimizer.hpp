#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zfr/cases.hpp"
#include "zfr/error_budget.hpp"
#include "zfr/test_function.hpp"

namespace zfr {

inline constexpr double kInitialR = 9.645908801;

struct ParameterPoint {
    double theta = 0.0;
    long t0 = 1;
    double r = 0.0, R = 0.0;
    double kappa = 0.0, delta = 0.0;
    double eta0 = 0.0, sigma0 = 0.0, omega0 = 0.0;
    double alpha = 0.0;
};

struct CaseResult {
    std::string case_name;
    int step = 1;
    ParameterPoint point;
    double e_eta0 = 0.0;
    double R0 = 0.0;
    bool converged = false;
};

struct OptimizerOptions {
    QuadratureConfig quadrature{};
    BudgetOptions budget{};
    long t0_max = 5000;
    // Successive theta grid steps; each pass spans +-one step of the previous pass around its best point.
    std::vector<double> theta_steps{1e-2, 1e-3, 1e-4};
    double theta_margin = 0.02;
    int max_outer_steps = 20;
    double outer_tolerance = 1e-3;
    double initial_R = kInitialR;
    unsigned threads = 0;  // 0: hardware concurrency
};

// eta0, sigma0, omega0 then (kappa, delta) and alpha per the case.
ParameterPoint derive_point(const CaseConfig& c, const ThetaFunction& tf, long t0, double r, double R,
                            std::optional<double> kernel = std::nullopt);
ParameterPoint derive_point(const CaseConfig& c, double theta, long t0, double r, double R,
                            const QuadratureConfig& quad = {});

BudgetInputs budget_inputs(const CaseConfig& c, const ThetaFunction& tf, const ParameterPoint& p,
                           const BudgetOptions& opts, std::optional<double> kernel = std::nullopt);

double compute_r0(const CaseConfig& c, const ThetaFunction& tf, const ParameterPoint& p);

// Full row for fixed (theta, t0, r, R).
CaseResult evaluate_row(const CaseConfig& c, const ThetaFunction& tf, long t0, double r, double R,
                        const BudgetOptions& opts = {});

// Smallest t0 with e(eta0) < 0; throws InfeasibleError above t0_max.
long minimal_t0(const CaseConfig& c, const ThetaFunction& tf, double r, double R, const OptimizerOptions& opts);

struct RSolution {
    double r = 0.0;
    double R0 = 0.0;
    long t0 = 1;
    bool converged = false;
};

// Largest r on the 1e-3 grid in [r_lower, R] with r < R0(r) <= r + 1e-3.
RSolution solve_r(const CaseConfig& c, const ThetaFunction& tf, double R, const OptimizerOptions& opts);

struct ThetaSearchResult {
    double theta = 0.0;
    RSolution solution;
};
ThetaSearchResult search_theta(const CaseConfig& c, double R, const OptimizerOptions& opts);

std::vector<CaseResult> optimize_case(const CaseConfig& c, const OptimizerOptions& opts = {});

struct Pin {
    std::optional<double> theta, r, R;
    std::optional<long> t0;
};

// One row with any subset of (theta, t0, r, R) pinned; the rest are optimized.
CaseResult run_pinned(const CaseConfig& c, const Pin& pin, const OptimizerOptions& opts = {});

}  // namespace zfr
