#include "symest/measurement.hpp"

#include <cmath>
#include <stdexcept>

#include "symest/rng.hpp"

namespace symest {

Outcome outcome_from_label(char label) {
    if (label == 'a') {
        return Outcome::Antisymmetric;
    }
    if (label == 's') {
        return Outcome::Symmetric;
    }
    throw std::invalid_argument("outcome_from_label: expected 'a' or 's'");
}

double p_antisymmetric(const UnitVector3& psi, const UnitVector3& reference) {
    const double dx = psi.x - reference.x;
    const double dy = psi.y - reference.y;
    const double dz = psi.z - reference.z;
    const double p = 0.125 * (dx * dx + dy * dy + dz * dz);
    return p > 0.5 ? 0.5 : p;
}

double p_antisymmetric(const Qubit& psi, const Qubit& reference) {
    return p_antisymmetric(to_unit_vector(psi), to_unit_vector(reference));
}

double p_antisymmetric_angles(const Qubit& psi, const Qubit& reference) {
    return 0.25 * (1.0 - std::cos(psi.theta()) * std::cos(reference.theta()) -
                   std::cos(psi.phi() - reference.phi()) * std::sin(psi.theta()) *
                       std::sin(reference.theta()));
}

double p_symmetric(const UnitVector3& psi, const UnitVector3& reference) {
    return 1.0 - p_antisymmetric(psi, reference);
}

double p_symmetric(const Qubit& psi, const Qubit& reference) {
    return 1.0 - p_antisymmetric(psi, reference);
}

Outcome sample_outcome(const Qubit& psi, const Qubit& reference, RngStream& rng) {
    const double u = rng.next_u01();
    return u < p_antisymmetric(psi, reference) ? Outcome::Antisymmetric : Outcome::Symmetric;
}

}  // namespace symest
