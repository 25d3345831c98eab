#pragma once

#include "cyclic/rational.hpp"

#include <optional>
#include <vector>

namespace cyclic {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Solves the square system A x = b exactly by Gaussian elimination.
/// Returns nullopt when A is singular.
std::optional<std::vector<Rational>> solve_square(RationalMatrix a, std::vector<Rational> b);

}  // namespace cyclic
