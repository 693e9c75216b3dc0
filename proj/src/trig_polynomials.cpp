#include "zfr/trig_polynomials.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "zfr/special_functions.hpp"

namespace zfr {

double CosinePolynomial::tail_sum() const {
    return std::accumulate(coefficients.begin() + 1, coefficients.end(), 0.0);
}

double evaluate(const CosinePolynomial& p, double y) {
    double s = 0.0;
    for (std::size_t k = 0; k < p.coefficients.size(); ++k) s += p.coefficients[k] * std::cos(k * y);
    return s;
}

CertificationReport certify_nonnegative(const CosinePolynomial& p, int grid_points) {
    CertificationReport rep;
    rep.grid_min = evaluate(p, 0.0);
    bool witness_set = false;
    for (int i = 0; i <= grid_points; ++i) {
        const double y = 2.0 * kPi * i / grid_points;
        const double v = evaluate(p, y);
        if (v < rep.grid_min) {
            rep.grid_min = v;
            rep.argmin = y;
        }
        if (v < -1e-9 && !witness_set) {
            rep.witness = y;
            witness_set = true;
        }
        if (p.factored) rep.max_factored_gap = std::max(rep.max_factored_gap, std::abs(v - p.factored(y)));
    }
    rep.passed = !witness_set && rep.max_factored_gap <= 1e-8;
    std::ostringstream os;
    os << p.name << ": min " << rep.grid_min << " at y=" << rep.argmin << ", factored gap " << rep.max_factored_gap;
    if (witness_set) os << ", negative at y=" << rep.witness;
    rep.message = os.str();
    return rep;
}

std::vector<double> chebyshev_expand(const std::vector<double>& power_coeffs) {
    // cos^n y as a cosine series via repeated multiplication by cos y.
    const std::size_t deg = power_coeffs.size() - 1;
    std::vector<double> out(deg + 1, 0.0), cur(deg + 1, 0.0);
    cur[0] = 1.0;
    for (std::size_t n = 0; n <= deg; ++n) {
        for (std::size_t k = 0; k <= deg; ++k) out[k] += power_coeffs[n] * cur[k];
        std::vector<double> next(deg + 1, 0.0);
        for (std::size_t k = 0; k <= deg; ++k) {
            if (cur[k] == 0.0) continue;
            // cos(ky) cos(y) = (cos((k+1)y) + cos((k-1)y)) / 2
            if (k == 0) {
                if (deg >= 1) next[1] += cur[0];
            } else {
                if (k + 1 <= deg) next[k + 1] += 0.5 * cur[k];
                next[k - 1] += 0.5 * cur[k];
            }
        }
        cur = next;
    }
    return out;
}

CosinePolynomial p1() {
    return {"P1",
            {10.91692658, 18.63362, 11.4517, 4.7, 1.0},
            "8(0.91+cos y)^2(0.265+cos y)^2",
            [](double y) {
                const double c = std::cos(y);
                return 8.0 * (0.91 + c) * (0.91 + c) * (0.265 + c) * (0.265 + c);
            }};
}

CosinePolynomial p2() {
    return {"P2", {2.0, 3.0, 2.0, 1.0}, "4cos^2 y(1+cos y)", [](double y) {
                const double c = std::cos(y);
                return 4.0 * c * c * (1.0 + c);
            }};
}

CosinePolynomial p3() {
    return {"P3", {5.0, 8.0, 4.0, 1.0}, "(1+cos y)(1+2cos y)^2", [](double y) {
                const double c = std::cos(y);
                return (1.0 + c) * (1.0 + 2.0 * c) * (1.0 + 2.0 * c);
            }};
}

CosinePolynomial p4() {
    return {"P4", {1.0, 1.0}, "1+cos y", [](double y) { return 1.0 + std::cos(y); }};
}

bool sigma5_product_nonnegative(int grid_points) {
    for (int i = 0; i < grid_points; ++i)
        for (int j = 0; j < grid_points; ++j) {
            const double v = (1.0 + std::cos(2.0 * kPi * i / grid_points)) * (1.0 + std::cos(2.0 * kPi * j / grid_points));
            if (v < -1e-12) return false;
        }
    return true;
}

}  // namespace zfr
