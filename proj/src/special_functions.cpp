#include "zfr/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace zfr {
namespace {

// B_{2k} / (2k) for k = 1..8.
constexpr double kAsym[] = {1.0 / 12.0,   -1.0 / 120.0,      1.0 / 252.0,   -1.0 / 240.0,
                            1.0 / 132.0,  -691.0 / 32760.0,  1.0 / 12.0,    -3617.0 / 8160.0};

template <class T>
T asymptotic_psi(T z) {
    // ln z - 1/(2z) - sum B_{2k}/(2k z^{2k})
    const T inv2 = T(1.0) / (z * z);
    T term = inv2, acc = T(0.0);
    for (double c : kAsym) {
        acc += c * term;
        term *= inv2;
    }
    return std::log(z) - T(0.5) / z - acc;
}

}  // namespace

double digamma_real(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("digamma_real: argument must be positive");
    double shift = 0.0;
    while (x < 8.0) {
        shift += 1.0 / x;
        x += 1.0;
    }
    return asymptotic_psi(x) - shift;
}

double re_digamma_half(double x, double y) {
    if (!(x > 0.0)) throw DomainError("re_digamma_half: x must be positive");
    std::complex<double> z(0.5 * x, 0.5 * y);
    std::complex<double> shift(0.0, 0.0);
    while (z.real() < 12.0) {
        shift += 1.0 / z;
        z += 1.0;
    }
    return (asymptotic_psi(z) - shift).real();
}

double series_re_digamma_half(double x, double y, const DigammaSeriesConfig& cfg) {
    if (!(x > 0.0)) throw DomainError("series_re_digamma_half: x must be positive");
    if (cfg.truncation_l < 100) throw PreconditionError("truncation_l must be at least 100");
    const long l = cfg.truncation_l;
    const double y2 = y * y;
    double s = 0.0;
    for (long n = l; n >= 1; --n) {
        const double u = 2.0 * n + x;
        s += 1.0 / n - 2.0 * u / (u * u + y2);
    }
    double value = -kEulerGamma - 2.0 * x / (x * x + y2) + s;
    if (cfg.tail_mode == TailMode::extended_precision) {
        // sum_{n>l} g(n) ~ int_l^inf g - g(l)/2 - g'(l)/12
        const double ld = static_cast<double>(l);
        const double u = 2.0 * ld + x;
        const double integral = -std::log(2.0) - std::log(ld) + 0.5 * std::log(u * u + y2);
        const double g = 1.0 / ld - 2.0 * u / (u * u + y2);
        const double gp = -1.0 / (ld * ld) - 4.0 * (y2 - u * u) / ((u * u + y2) * (u * u + y2));
        value += integral - 0.5 * g - gp / 12.0;
    }
    return value;
}

double u_bound(double T) { return std::log(6.0 * (T + 12.0)); }

namespace {
void check_delta_args(double x0, double x1, double y1, double kappa, double delta) {
    std::ostringstream os;
    if (!(x0 > 0.0 && x0 <= x1)) os << "need 0 < x0 <= x1 (x0=" << x0 << ", x1=" << x1 << ")";
    else if (!(y1 > 0.0)) os << "need y1 > 0 (y1=" << y1 << ")";
    else if (!(delta >= 0.0 && delta <= 1.0)) os << "need 0 <= delta <= 1 (delta=" << delta << ")";
    else if (!(kappa >= 0.0 && kappa <= x0 / (x0 + delta)))
        os << "need 0 <= kappa <= x0/(x0+delta) (kappa=" << kappa << ")";
    if (!os.str().empty()) throw PreconditionError("delta_bound: " + os.str());
}
}  // namespace

double delta_r1(double x0, double x1, double y1, double k, double d, int l) {
    check_delta_args(x0, x1, y1, k, d);
    const double y2 = y1 * y1;
    double s = -kEulerGamma * (1.0 - k) - 2.0 * (x0 / (x1 * x1 + y2) - k * (x1 + d) / ((x0 + d) * (x0 + d) + y2));
    for (int n = l; n >= 1; --n) {
        const double a = 2.0 * n + x1, b = 2.0 * n + x1 + d;
        s += 1.0 / n - (4.0 * n + 2.0 * x0) / (a * a + y2) -
             k * (1.0 / n - (4.0 * n + 2.0 * x0 + 2.0 * d) / (b * b + y2));
    }
    const double ld = l;
    return s + 1.0 / ld + 1.0 / (4.0 * ld * ld) - k * ((1.0 + d) / ld + (17.0 + 18.0 * d) / (8.0 * ld * ld));
}

double delta_r2(double x0, double x1, double y1, double k, double d) {
    check_delta_args(x0, x1, y1, k, d);
    return (1.0 - k) / 2.0 * std::log((x1 + d) * (x1 + d) / (y1 * y1) + 1.0) + std::atan(y1 / x1) / y1 +
           k * std::atan(y1 / (x1 + d)) / y1;
}

double delta_r3(double x0, double x1, double y1, double k, double d) {
    check_delta_args(x0, x1, y1, k, d);
    return (1.0 / (3.0 * y1)) * (1.0 / x0 + k / (x0 + d)) + (x1 * x1 + k * (x1 + d) * (x1 + d)) / (2.0 * y1 * y1);
}

double delta_bound(DeltaRegime regime, double x0, double x1, double y1, double kappa, double delta, int l) {
    if (regime == DeltaRegime::small_y) return delta_r1(x0, x1, y1, kappa, delta, l);
    return std::min(delta_r2(x0, x1, y1, kappa, delta), delta_r3(x0, x1, y1, kappa, delta));
}

double zeta2_tail(long t0) {
    if (t0 < 1) throw PreconditionError("zeta2_tail: t0 must be >= 1");
    double partial = 0.0;
    for (long n = t0 - 1; n >= 1; --n) partial += 1.0 / (static_cast<double>(n) * n);
    return kPi * kPi / 6.0 - partial;
}

double log_zeta2_tail(long t0) {
    if (t0 < 1) throw PreconditionError("log_zeta2_tail: t0 must be >= 1");
    const long N = std::max(t0, 2000L) + 2000;
    double s = 0.0;
    for (long n = N - 1; n >= t0; --n) {
        const double x = static_cast<double>(n);
        s += std::log(x) / (x * x);
    }
    const double x = static_cast<double>(N), lx = std::log(x);
    const double f = lx / (x * x), fp = (1.0 - 2.0 * lx) / (x * x * x);
    return s + (lx + 1.0) / x + 0.5 * f - fp / 12.0;
}

}  // namespace zfr
