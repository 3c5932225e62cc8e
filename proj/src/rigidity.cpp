#include "epsymp/rigidity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace epsymp {

namespace {

template <typename F>
double bisect(F f, double lo, double hi) {
    double flo = f(lo);
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        const double fm = f(mid);
        if (fm == 0.0) {
            return mid;
        }
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double z0_value() {
    static const double z = bisect([](double z) { return z * z * z + 6.75 * z - 6.75; }, 0.0, 1.0);
    return z;
}

}  // namespace

CubicRoot cubic_z0() {
    const double z = z0_value();
    const double closed = 1.5 * (std::cbrt(1.0 + std::numbers::sqrt2) + std::cbrt(1.0 - std::numbers::sqrt2));
    return {z, closed, std::abs(z * z * z + 6.75 * z - 6.75)};
}

double rigidity_threshold() {
    const double z = z0_value();
    return 1.0 - z * z;
}

double c_rho(double rho) {
    if (!(rho <= 1.0) || !(rho > z0_value())) {
        throw std::domain_error("c_rho: rho must lie in (z0, 1]");
    }
    const double k = (1.0 - rho) / (rho * rho * rho);
    if (k == 0.0) {
        return 1.0;
    }
    auto g = [k](double c) { return c * c * c - c * c + k; };
    // g(2/3) = k - 4/27 < 0 <= g(1) = k, and g is increasing on (2/3, 1].
    return bisect(g, 2.0 / 3.0, 1.0);
}

double rigidity_bound(double eps, int n) {
    if (n < 1) {
        throw std::invalid_argument("rigidity_bound: n must be positive");
    }
    if (!(eps >= 0.0) || !(eps < rigidity_threshold())) {
        throw std::domain_error("rigidity_bound: eps must lie in [0, 1 - z0^2)");
    }
    const double rho = std::sqrt(1.0 - eps);
    double lambda_max = 1.0 / c_rho(rho);
    if (eps < 1.0 - std::pow(0.5, 0.25)) {
        lambda_max = std::min(lambda_max, 1.0 / (rho * rho));
    }
    const double l2 = lambda_max * lambda_max;
    const double slack = 1.0 / rho - 1.0;
    const double mu_a = std::sqrt(std::max(0.0, 1.0 - 2.0 * l2 * slack));
    const double mu_b = std::sqrt(std::max(0.0, 2.0 * rho - 1.0));
    const double mu_min = std::clamp(std::min(mu_a, mu_b), 0.0, 1.0);
    const double m2 = mu_min * mu_min;
    const double spread = std::max((l2 - m2) * (l2 - m2), (1.0 - rho * rho) * (1.0 - rho * rho));
    return std::sqrt(n * (spread + 1.0 - m2 * m2));
}

}  // namespace epsymp
