#include "zfr/quadrature.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <vector>

namespace zfr {
namespace {

// 10-point Gauss-Legendre nodes/weights on [-1, 1] (positive half).
constexpr std::array<double, 5> kNodes = {
    0.1488743389816312108848260, 0.4333953941292471907992659, 0.6794095682990244062343274,
    0.8650633666889845107320967, 0.9739065285171717200779640};
constexpr std::array<double, 5> kWeights = {
    0.2955242247147528701738930, 0.2692667193099963550912269, 0.2190863625159820439955349,
    0.1494513491505805931457763, 0.0666713443086881375935688};

double gauss10(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < kNodes.size(); ++i) {
        const double dx = h * kNodes[i];
        s += kWeights[i] * (f(c - dx) + f(c + dx));
    }
    return s * h;
}

struct Panel {
    double a, b, whole;
    double fa, fm, fb;  // Simpson only
};

QuadratureResult adaptive_gl(const std::function<double(double)>& f, double a, double b,
                             const QuadratureConfig& cfg) {
    QuadratureResult res;
    std::vector<Panel> stack{{a, b, gauss10(f, a, b), 0, 0, 0}};
    double total_est = std::abs(stack.back().whole);
    while (!stack.empty()) {
        Panel p = stack.back();
        stack.pop_back();
        const double m = 0.5 * (p.a + p.b);
        const double left = gauss10(f, p.a, m), right = gauss10(f, m, p.b);
        const double refined = left + right;
        const double err = std::abs(refined - p.whole);
        const double width_share = (p.b - p.a) / (b - a);
        const double tol = std::max(cfg.abs_tol, cfg.rel_tol * total_est) * std::max(width_share, 1e-6);
        if (err <= tol || (p.b - p.a) < 1e-14 * std::max(1.0, std::abs(b - a))) {
            res.value += refined;
            res.error_estimate += err;
            continue;
        }
        if (++res.subdivisions > cfg.max_subdivisions) {
            std::ostringstream os;
            os << "quadrature did not converge on [" << a << ", " << b << "]: worst panel [" << p.a
               << ", " << p.b << "] err " << err << " tol " << tol;
            throw NumericError(os.str());
        }
        stack.push_back({m, p.b, right, 0, 0, 0});
        stack.push_back({p.a, m, left, 0, 0, 0});
    }
    return res;
}

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  const QuadratureConfig& cfg) {
    QuadratureResult res;
    auto simpson = [](double a, double b, double fa, double fm, double fb) {
        return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    };
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    std::vector<Panel> stack{{a, b, simpson(a, b, fa, fm, fb), fa, fm, fb}};
    double total_est = std::abs(stack.back().whole);
    while (!stack.empty()) {
        Panel p = stack.back();
        stack.pop_back();
        const double m = 0.5 * (p.a + p.b);
        const double flm = f(0.5 * (p.a + m)), frm = f(0.5 * (m + p.b));
        const double left = simpson(p.a, m, p.fa, flm, p.fm);
        const double right = simpson(m, p.b, p.fm, frm, p.fb);
        const double err = std::abs(left + right - p.whole) / 15.0;
        const double width_share = (p.b - p.a) / (b - a);
        const double tol = std::max(cfg.abs_tol, cfg.rel_tol * total_est) * std::max(width_share, 1e-9);
        if (err <= tol || (p.b - p.a) < 1e-13 * std::max(1.0, std::abs(b - a))) {
            res.value += left + right + (left + right - p.whole) / 15.0;
            res.error_estimate += err;
            continue;
        }
        if (++res.subdivisions > cfg.max_subdivisions * 50) {
            std::ostringstream os;
            os << "simpson quadrature did not converge on [" << a << ", " << b << "]";
            throw NumericError(os.str());
        }
        stack.push_back({m, p.b, right, p.fm, frm, p.fb});
        stack.push_back({p.a, m, left, p.fa, flm, p.fm});
    }
    return res;
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureConfig& cfg) {
    if (!(b > a)) return {};
    if (cfg.method == QuadratureMethod::adaptive_simpson) return adaptive_simpson(f, a, b, cfg);
    return adaptive_gl(f, a, b, cfg);
}

}  // namespace zfr
