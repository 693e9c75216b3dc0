#pragma once
// Small independent reference computations shared by the unit tests.
#include <boost/math/special_functions/digamma.hpp>

#include <cmath>
#include <functional>

namespace oracle {

// Re psi(a + ib) = psi(a) + b^2 sum_{n>=0} 1/((n+a)((n+a)^2+b^2)), tail by Euler-Maclaurin.
inline double re_psi(double a, double b) {
    const long N = 1000000;
    long double s = 0.0L;
    const long double A = a, B = b;
    for (long n = N - 1; n >= 0; --n) {
        const long double t = n + A;
        s += 1.0L / (t * (t * t + B * B));
    }
    // sum_{n>=N} f(n) ~ int_N^inf f + f(N)/2
    const long double t = N + A;
    s += B == 0 ? 1.0L / (2.0L * t * t) : std::log1p(B * B / (t * t)) / (2.0L * B * B);
    s += 0.5L / (t * (t * t + B * B));
    return static_cast<double>(boost::math::digamma(static_cast<long double>(a)) + B * B * s);
}

// Delta(x, y) = Re psi((x+iy)/2) - kappa Re psi((x+delta+iy)/2)
inline double big_delta(double x, double y, double kappa, double delta) {
    return re_psi(x / 2, y / 2) - kappa * re_psi((x + delta) / 2, y / 2);
}

// Composite Simpson with n panels (n even).
inline double simpson(const std::function<double(double)>& f, double a, double b, long n) {
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (long i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

}  // namespace oracle
