#include "zfr/stechkin.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "zfr/special_functions.hpp"

namespace zfr {
namespace {
double numerator(double s0, double e0, double h0, double m) {
    const double a = 2.0 * s0 - 1.0;
    if (!(a > 0.0)) throw PreconditionError("stechkin: need 2*sigma0 - 1 > 0");
    return h0 * a - m * e0 * e0 / a;
}
void check_delta(double d) {
    if (!(d > 0.0 && d <= 1.0)) throw PreconditionError("stechkin: delta must lie in (0, 1]");
}
}  // namespace

double kappa2(double d, double s0, double e0, double h0, double m) {
    check_delta(d);
    const double a = 2.0 * s0 - 1.0;
    const double num = numerator(s0, e0, h0, m);
    return num / ((2.0 * d + 1.0) * h0 + (1.0 / d + 1.0 / (a + d)) * m * e0 * e0);
}

double kappa3(double d, double s0, double e0, double h0, double m) {
    check_delta(d);
    const double a = 2.0 * s0 - 1.0;
    const double num = numerator(s0, e0, h0, m);
    const double b = a + d;
    return num / ((1.0 / d + (1.0 + d) / (b * b)) * h0 + m * e0 * e0 * (1.0 / (d * d * d) + 1.0 / (b * b * b)));
}

StechkinParams solve_delta_kappa(double s0, double e0, double h0, double m) {
    if (!std::isfinite(s0) || !std::isfinite(e0) || !std::isfinite(h0) || !std::isfinite(m))
        throw PreconditionError("solve_delta_kappa: non-finite input");
    auto g = [&](double d) { return kappa2(d, s0, e0, h0, m) - kappa3(d, s0, e0, h0, m); };
    double lo = 0.3, hi = 1.0, glo = g(lo), ghi = g(hi);
    if ((glo < 0.0) == (ghi < 0.0)) {
        std::ostringstream os;
        os << "no sign change of kappa2-kappa3 on [0.3, 1]: " << glo << ", " << ghi;
        throw SolverError(os.str());
    }
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi), gm = g(mid);
        if ((gm < 0.0) == (glo < 0.0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    const double d = 0.5 * (lo + hi);
    return {d, kappa2(d, s0, e0, h0, m), s0, e0, h0, m};
}

double stechkin_expression(double beta, double y, double sigma, StechkinForm form) {
    if (!(beta >= 0.5 && beta <= 1.0) || !(y > 0.0) || !(sigma > 1.0))
        throw PreconditionError("stechkin check: need beta in [1/2,1], y > 0, sigma > 1");
    using C = std::complex<double>;
    const double tau = (1.0 + std::sqrt(1.0 + 4.0 * sigma * sigma)) / 2.0;
    const C iy(0.0, y);
    const C first = form == StechkinForm::symmetric ? 1.0 / (tau - beta + iy) : 1.0 / (tau - 1.0 + beta + iy);
    const C e = 1.0 / (sigma - beta + iy) + 1.0 / (sigma - 1.0 + beta + iy) -
                (first + 1.0 / (tau - 1.0 + beta + iy)) / std::sqrt(5.0);
    return e.real();
}

bool stechkin_inequality_check(double beta, double y, double sigma, StechkinForm form) {
    return stechkin_expression(beta, y, sigma, form) >= -1e-12;
}

}  // namespace zfr
