#pragma once

namespace zfr {

struct DensityConstants {
    double c1 = 0.91845;
    double c2 = 5.36927;
};

// Which constant multiplies sum n^{-2} log pi in w2.
enum class W2Constant { log_pi_over_pi, log_pi_over_two_pi };

struct TailWeights {
    long t0 = 1;
    double w1 = 0.0;
    double w2 = 0.0;
};

double n_upper(double T, double q, const DensityConstants& c = {});
double n_lower(double T, double q, const DensityConstants& c = {});

TailWeights tail_weights(long t0, W2Constant variant = W2Constant::log_pi_over_pi,
                         const DensityConstants& c = {});

double s0_weight(int k, const TailWeights& w, double r, double q0, double Y0);
double s0_weight(int k, long t0, double r, double q0, double Y0);

}  // namespace zfr
