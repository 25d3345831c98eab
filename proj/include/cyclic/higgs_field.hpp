#pragma once

// Twisted Higgs fields as matrices of binary forms, and their characteristic
// polynomials computed by direct determinant expansion.

#include "cyclic/divisor.hpp"
#include "cyclic/representation.hpp"

#include <optional>
#include <vector>

namespace cyclic {

/// phi[row][col] is the component from summand `col` to summand `row`;
/// nullopt marks a structural zero (for example Hom into a negative degree).
using HiggsMatrix = std::vector<std::vector<std::optional<CoeffForm>>>;

/// Coefficients of det(lambda Id - Phi); entry e multiplies lambda^e and is a
/// form of degree (n - e) * twist. Throws DegreeMismatch if the entries are not
/// graded consistently with the twist.
std::vector<CoeffForm> characteristic_polynomial(const HiggsMatrix& phi, int twist);

/// The cyclic matrix with phi_i below the diagonal and phi_n in the corner.
HiggsMatrix cyclic_higgs_field(const CyclicRep& r);

}  // namespace cyclic
