#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace symest {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Pure qubit state as a point on the Bloch sphere.
///
/// Canonical form: theta in [0, pi], phi in [0, 2*pi), and phi == 0 at the
/// poles where the azimuth is physically meaningless. The constructor folds
/// arbitrary angles into this form, so downstream code can compare states
/// and histogram them without gauge ambiguity.
class Qubit {
  public:
    Qubit() = default;
    Qubit(double theta, double phi);

    double theta() const { return theta_; }
    double phi() const { return phi_; }

  private:
    double theta_ = 0.0;
    double phi_ = 0.0;
};

struct UnitVector3 {
    double x = 0.0;
    double y = 0.0;
    double z = 1.0;
};

inline double dot(const UnitVector3& a, const UnitVector3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

double norm(const UnitVector3& v);

/// Bloch map n = (sin t cos p, sin t sin p, cos t). Exact at the poles.
UnitVector3 to_unit_vector(const Qubit& q);

/// Inverse Bloch map, canonicalized. Throws std::invalid_argument if the
/// input norm deviates from 1 by more than 1e-9.
Qubit from_unit_vector(const UnitVector3& v);

/// Overlap fidelity |<a|b>|^2 = (1 + n_a . n_b) / 2, evaluated through the
/// chord form 1 - |n_a - n_b|^2 / 4 so identical states give exactly 1.
double fidelity(const UnitVector3& a, const UnitVector3& b);
double fidelity(const Qubit& a, const Qubit& b);

/// Proper rotation of 3-space, row-major 3x3.
struct Rotation {
    std::array<double, 9> m{1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0};

    UnitVector3 apply(const UnitVector3& v) const {
        return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
                m[3] * v.x + m[4] * v.y + m[5] * v.z,
                m[6] * v.x + m[7] * v.y + m[8] * v.z};
    }
};

/// Rotation R with R(n_target) = (0,0,1): the in-plane rotation about
/// n_target x z by the angle between them. Identity for the north pole,
/// a pi turn about x for the south pole.
Rotation rotation_to_north_pole(const Qubit& target);

/// Deterministic near-uniform covering of the sphere.
struct SphereGrid {
    std::vector<UnitVector3> points;

    std::size_t resolution() const { return points.size(); }
};

/// Fibonacci lattice with `resolution` points. Same resolution always yields
/// the identical point list. Throws std::invalid_argument for resolution < 2.
SphereGrid make_sphere_grid(std::size_t resolution);

}  // namespace symest
