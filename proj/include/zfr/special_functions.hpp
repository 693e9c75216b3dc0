#pragma once

#include <stdexcept>

namespace zfr {

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kPi = 3.14159265358979323846264338327950288;

enum class TailMode { paper_tail_bounds, extended_precision };

struct DigammaSeriesConfig {
    int truncation_l = 100;
    TailMode tail_mode = TailMode::paper_tail_bounds;
};

// psi(x) for x > 0: recurrence up to x >= 8, then the asymptotic expansion.
double digamma_real(double x);

// Re psi((x + iy)/2), complex recurrence plus asymptotic series.
double re_digamma_half(double x, double y);

// The same quantity from the series
//   -gamma - 2x/(x^2+y^2) + sum_{n>=1} (1/n - 2(2n+x)/((2n+x)^2+y^2))
// truncated at l. extended_precision adds an Euler-Maclaurin tail.
double series_re_digamma_half(double x, double y, const DigammaSeriesConfig& cfg = {});

// U(T) = log(6(T+12)).
double u_bound(double T);

enum class DeltaRegime { small_y, large_y };

// r1 for small_y, min(r2, r3) for large_y. Caller adds (1-kappa) log(|y|/2) when needed.
double delta_bound(DeltaRegime regime, double x0, double x1, double y1, double kappa, double delta,
                   int l = 100);
double delta_r1(double x0, double x1, double y1, double kappa, double delta, int l = 100);
double delta_r2(double x0, double x1, double y1, double kappa, double delta);
double delta_r3(double x0, double x1, double y1, double kappa, double delta);

// sum_{n >= t0} 1/n^2 via zeta(2) minus the partial sum.
double zeta2_tail(long t0);
// sum_{n >= t0} log(n)/n^2; direct sum plus Euler-Maclaurin tail (error < 1e-13).
double log_zeta2_tail(long t0);

}  // namespace zfr
