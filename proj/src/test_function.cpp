#include "zfr/test_function.hpp"

#include <cmath>
#include <sstream>

#include "zfr/special_functions.hpp"

namespace zfr {

ThetaFunction::ThetaFunction(double theta, QuadratureConfig quad) : theta_(theta), quad_(quad) {
    if (!(theta > kPi / 2 && theta < kPi)) {
        std::ostringstream os;
        os << "theta must lie in (pi/2, pi), got " << theta;
        throw DomainError(os.str());
    }
    tan_ = std::tan(theta);
    sec2_ = 1.0 + tan_ * tan_;
    sin_t_ = std::sin(theta);
    sin_2t_ = std::sin(2.0 * theta);
    d1_ = -2.0 * theta / tan_;
    h0_ = sec2_ * (3.0 - theta * tan_ - 3.0 * theta / tan_);
    m_theta_ = std::abs(h_second_raw(0.0));

    // Locate sign changes of h'' by sampling then bisection.
    const int samples = 400;
    double prev_u = 0.0, prev_v = h_second_raw(0.0);
    for (int i = 1; i < samples; ++i) {
        const double u = d1_ * i / samples;
        const double v = h_second_raw(u);
        if ((prev_v < 0.0) != (v < 0.0) && prev_v != 0.0) {
            double lo = prev_u, hi = u, flo = prev_v;
            while (hi - lo > 1e-12 * std::max(1.0, d1_)) {
                const double mid = 0.5 * (lo + hi), fm = h_second_raw(mid);
                if ((fm < 0.0) == (flo < 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            roots_.push_back(0.5 * (lo + hi));
        }
        prev_u = u;
        prev_v = v;
    }
}

double ThetaFunction::h(double u) const {
    if (u < 0.0 || u > d1_) return 0.0;
    const double T = tan_, th = theta_, uT = u * T;
    return sec2_ * (sec2_ * (-th / T - u / 2.0) * std::cos(uT) - 2.0 * th / T - u -
                    std::sin(2.0 * th + uT) / sin_2t_ + 2.0 * (1.0 + std::sin(th + uT) / sin_t_));
}

double ThetaFunction::h_prime(double u) const {
    if (u < 0.0 || u > d1_) return 0.0;
    const double T = tan_, th = theta_, uT = u * T;
    return sec2_ * (sec2_ * (-0.5 * std::cos(uT) + (th + uT / 2.0) * std::sin(uT)) - 1.0 -
                    T * std::cos(2.0 * th + uT) / sin_2t_ + 2.0 * T * std::cos(th + uT) / sin_t_);
}

double ThetaFunction::h_second_raw(double u) const {
    const double T = tan_, th = theta_, uT = u * T;
    return sec2_ * (sec2_ * (T * std::sin(uT) + T * T * (th / T + u / 2.0) * std::cos(uT)) +
                    T * T * std::sin(2.0 * th + uT) / sin_2t_ - 2.0 * T * T * std::sin(th + uT) / sin_t_);
}

double ThetaFunction::h_second(double u) const {
    if (u < 0.0 || u > d1_) throw DomainError("h_second: u outside the support");
    return h_second_raw(u);
}

double integrate_pieces(const std::function<double(double)>& f, const std::vector<double>& breaks,
                        const QuadratureConfig& cfg) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) total += integrate(f, breaks[i], breaks[i + 1], cfg).value;
    return total;
}

double ThetaFunction::laplace_f_tilde(double X, double Y) const {
    auto f = [&](double t) { return h(t) * std::exp(-X * t) * std::cos(Y * t); };
    return integrate(f, 0.0, d1_, quad_).value;
}

std::complex<double> ThetaFunction::laplace(std::complex<double> s, int order) const {
    if (order != 0 && order != 2) throw PreconditionError("laplace: order must be 0 or 2");
    auto g = [&](double t) { return order == 0 ? h(t) : h_second_raw(t); };
    auto re = [&](double t) { return g(t) * std::real(std::exp(-s * t)); };
    auto im = [&](double t) { return g(t) * std::imag(std::exp(-s * t)); };
    return {integrate(re, 0.0, d1_, quad_).value, integrate(im, 0.0, d1_, quad_).value};
}

double ThetaFunction::kernel_M(double z) const {
    std::vector<double> breaks{0.0};
    breaks.insert(breaks.end(), roots_.begin(), roots_.end());
    breaks.push_back(d1_);
    auto f = [&](double u) { return std::abs(h_second_raw(u)) * std::exp(-z * u); };
    return integrate_pieces(f, breaks, quad_);
}

double ThetaFunction::r0_denominator(double a0, double a1, double omega0, double alpha,
                                     DenominatorVariant variant) const {
    double w = omega0, al = 0.0;
    switch (variant) {
        case DenominatorVariant::caseI: break;
        case DenominatorVariant::caseII: w = 0.0; break;
        case DenominatorVariant::caseIII_IV:
            a0 = 1.0;
            a1 = 2.0;
            al = alpha;
            break;
    }
    auto f = [&](double t) { return (a1 * std::exp(-t) * std::cos(al * t) - a0) * h(t) * std::exp(w * t); };
    const double value = integrate(f, 0.0, d1_, quad_).value;
    if (!(value > 0.0)) {
        std::ostringstream os;
        os << "main-term integral not positive (" << value << ") at theta=" << theta_;
        throw InfeasibleError(os.str());
    }
    return value;
}

}  // namespace zfr
