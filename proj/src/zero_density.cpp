#include "zfr/zero_density.hpp"

#include <cmath>

#include "zfr/special_functions.hpp"

namespace zfr {
namespace {
void check_tq(double T, double q) {
    if (!(T >= 1.0) || !(q >= 1.0)) throw PreconditionError("zero density: need T >= 1 and q >= 1");
}
double main_count(double T, double q) { return T / kPi * std::log(q * T / (2.0 * kPi * std::exp(1.0))); }
}  // namespace

double n_upper(double T, double q, const DensityConstants& c) {
    check_tq(T, q);
    return main_count(T, q) + c.c1 * std::log(q * T) + c.c2;
}

double n_lower(double T, double q, const DensityConstants& c) {
    check_tq(T, q);
    return main_count(T, q) - c.c1 * std::log(q * T) - c.c2;
}

TailWeights tail_weights(long t0, W2Constant variant, const DensityConstants& c) {
    const double z = zeta2_tail(t0);
    const double zl = log_zeta2_tail(t0);
    const double lead = c.c1 + 1.0 / (2.0 * kPi);
    const double lp = variant == W2Constant::log_pi_over_pi ? std::log(kPi) / kPi : std::log(kPi) / (2.0 * kPi);
    return {t0, lead * z, lead * zl + (2.0 * (c.c1 * std::log(2.0) + c.c2) - lp) * z};
}

double s0_weight(int k, const TailWeights& w, double r, double q0, double Y0) {
    const double L = std::log(q0 * Y0);
    if (!(L > 0.0)) throw PreconditionError("s0_weight: need q0*Y0 > 1");
    if (!(r > 0.0)) throw PreconditionError("s0_weight: need r > 0");
    if (k < 0 || k > 4) throw PreconditionError("s0_weight: k must be in 0..4");
    if (k == 0) return 2.0 * w.w1 / r + w.w2 / (r * L);
    return w.w1 * std::log(q0 * q0 * (k * Y0 + 1.0)) / (r * L) + w.w2 / (r * L);
}

double s0_weight(int k, long t0, double r, double q0, double Y0) {
    return s0_weight(k, tail_weights(t0), r, q0, Y0);
}

}  // namespace zfr
