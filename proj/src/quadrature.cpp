#include "symest/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace symest {

GaussLegendreRule gauss_legendre(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("gauss_legendre: need at least one node");
    }
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        // Tricomi-style initial guess, then Newton on P_n.
        double x = std::cos(kPi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                const double pk = ((2.0 * static_cast<double>(k) - 1.0) * x * p1 -
                                   (static_cast<double>(k) - 1.0) * p0) /
                                  static_cast<double>(k);
                p0 = p1;
                p1 = pk;
            }
            dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                break;
            }
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0.0;
    }
    return rule;
}

SphereQuadrature make_sphere_quadrature(std::size_t n_polar, std::size_t n_azimuth) {
    if (n_polar == 0 || n_azimuth == 0) {
        throw std::invalid_argument("make_sphere_quadrature: empty rule");
    }
    const GaussLegendreRule polar = gauss_legendre(n_polar);
    SphereQuadrature quad;
    quad.points.reserve(n_polar * n_azimuth);
    quad.weights.reserve(n_polar * n_azimuth);
    const double azimuth_weight = 1.0 / static_cast<double>(n_azimuth);
    for (std::size_t i = 0; i < n_polar; ++i) {
        const double z = polar.nodes[i];
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        // GL weights sum to 2 = the cos(theta) range; divide out for the average.
        const double wz = 0.5 * polar.weights[i];
        for (std::size_t j = 0; j < n_azimuth; ++j) {
            const double phi = kTwoPi * static_cast<double>(j) * azimuth_weight;
            quad.points.push_back({rho * std::cos(phi), rho * std::sin(phi), z});
            quad.weights.push_back(wz * azimuth_weight);
        }
    }
    return quad;
}

}  // namespace symest
