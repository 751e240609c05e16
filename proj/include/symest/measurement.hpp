#pragma once

#include <cstdint>

#include "symest/bloch.hpp"
#include "symest/rng.hpp"

namespace symest {

class RngStream;

/// Dichotomic result of comparing one copy against a reference: the product
/// state is projected either onto the antisymmetric (singlet) subspace or
/// onto its symmetric complement.
enum class Outcome : std::uint8_t {
    Antisymmetric = 0,
    Symmetric = 1,
};

constexpr char outcome_label(Outcome o) {
    return o == Outcome::Antisymmetric ? 'a' : 's';
}

/// Parses 'a' / 's'; throws std::invalid_argument otherwise.
Outcome outcome_from_label(char label);

/// Probability of the antisymmetric signature,
///   p_a = (1 - n_psi . n_ref) / 4,
/// computed as |n_psi - n_ref|^2 / 8 so identical states give exactly 0.
/// Always in [0, 1/2]; 1/2 only for antipodal states.
double p_antisymmetric(const UnitVector3& psi, const UnitVector3& reference);
double p_antisymmetric(const Qubit& psi, const Qubit& reference);

/// Same probability through the explicit angle form
///   (1 - cos t cos v - cos(p - q) sin t sin v) / 4.
/// Kept as an independent route for cross-checking the vector form.
double p_antisymmetric_angles(const Qubit& psi, const Qubit& reference);

/// Complementary probability 1 - p_a, in [1/2, 1].
double p_symmetric(const UnitVector3& psi, const UnitVector3& reference);
double p_symmetric(const Qubit& psi, const Qubit& reference);

/// One simulated symmetry measurement: draws u uniform in [0,1) and reports
/// Antisymmetric iff u < p_a. Consumes exactly one draw.
Outcome sample_outcome(const Qubit& psi, const Qubit& reference, RngStream& rng);

}  // namespace symest
