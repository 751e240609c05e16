#pragma once

#include <cstddef>
#include <vector>

#include "symest/bloch.hpp"

namespace symest {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point rule, exact for polynomials up to degree 2n-1.
GaussLegendreRule gauss_legendre(std::size_t n);

/// Quadrature nodes on the unit sphere with weights normalized to sum to 1,
/// so weighted sums approximate the uniform sphere average (1/4pi) dA.
struct SphereQuadrature {
    std::vector<UnitVector3> points;
    std::vector<double> weights;

    std::size_t size() const { return points.size(); }
};

/// Product rule: Gauss-Legendre in cos(theta) times a uniform azimuth grid.
/// Integrates any polynomial of low degree in the Cartesian components
/// essentially to machine precision.
SphereQuadrature make_sphere_quadrature(std::size_t n_polar, std::size_t n_azimuth);

}  // namespace symest
