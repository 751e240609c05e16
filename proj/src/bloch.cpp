#include "symest/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace symest {

Qubit::Qubit(double theta, double phi) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) {
        t += kTwoPi;
    }
    double p = phi;
    if (t > kPi) {
        // fold the lower chart (pi, 2*pi) back onto (0, pi)
        t = kTwoPi - t;
        p += kPi;
    }
    p = std::fmod(p, kTwoPi);
    if (p < 0.0) {
        p += kTwoPi;
    }
    if (t == 0.0 || t == kPi) {
        p = 0.0;
    }
    theta_ = t;
    phi_ = p;
}

double norm(const UnitVector3& v) {
    return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
}

UnitVector3 to_unit_vector(const Qubit& q) {
    if (q.theta() == 0.0) {
        return {0.0, 0.0, 1.0};
    }
    if (q.theta() == kPi) {
        return {0.0, 0.0, -1.0};
    }
    const double st = std::sin(q.theta());
    return {st * std::cos(q.phi()), st * std::sin(q.phi()), std::cos(q.theta())};
}

Qubit from_unit_vector(const UnitVector3& v) {
    if (std::abs(norm(v) - 1.0) > 1e-9) {
        throw std::invalid_argument("from_unit_vector: input is not a unit vector");
    }
    const double rho = std::hypot(v.x, v.y);
    if (rho == 0.0) {
        return Qubit(v.z > 0.0 ? 0.0 : kPi, 0.0);
    }
    double phi = std::atan2(v.y, v.x);
    if (phi < 0.0) {
        phi += kTwoPi;
    }
    return Qubit(std::atan2(rho, v.z), phi);
}

double fidelity(const UnitVector3& a, const UnitVector3& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double dz = a.z - b.z;
    const double f = 1.0 - 0.25 * (dx * dx + dy * dy + dz * dz);
    return f < 0.0 ? 0.0 : f;
}

double fidelity(const Qubit& a, const Qubit& b) {
    return fidelity(to_unit_vector(a), to_unit_vector(b));
}

Rotation rotation_to_north_pole(const Qubit& target) {
    const UnitVector3 n = to_unit_vector(target);
    const double s = std::hypot(n.x, n.y);  // sin of the angle to +z
    if (s == 0.0) {
        Rotation r;
        if (n.z < 0.0) {
            r.m = {1.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, -1.0};
        }
        return r;
    }
    const double c = std::clamp(n.z, -1.0, 1.0);
    // Rodrigues about the unit axis u = (n x z)/s = (n.y, -n.x, 0)/s
    const double ux = n.y / s;
    const double uy = -n.x / s;
    const double k = 1.0 - c;
    Rotation r;
    r.m = {c + k * ux * ux, k * ux * uy,      s * uy,
           k * ux * uy,     c + k * uy * uy, -s * ux,
           -s * uy,         s * ux,           c};
    return r;
}

SphereGrid make_sphere_grid(std::size_t resolution) {
    if (resolution < 2) {
        throw std::invalid_argument("make_sphere_grid: resolution must be at least 2");
    }
    const double golden_angle = kPi * (3.0 - std::sqrt(5.0));
    SphereGrid grid;
    grid.points.reserve(resolution);
    for (std::size_t i = 0; i < resolution; ++i) {
        const double z = -1.0 + (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(resolution);
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double ang = golden_angle * static_cast<double>(i);
        grid.points.push_back({rho * std::cos(ang), rho * std::sin(ang), z});
    }
    return grid;
}

}  // namespace symest
