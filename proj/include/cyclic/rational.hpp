#pragma once

#include <gmpxx.h>

#include <span>
#include <string>

namespace cyclic {

using Rational = mpq_class;
using Integer = mpz_class;

/// Binomial coefficient; zero outside 0 <= k <= n.
Integer binomial(long n, long k);

/// Multinomial coefficient (sum parts)! / prod(part!). Zero if any part is
/// negative.
Integer multinomial(std::span<const int> parts);

/// Canonical text of a rational: "p" or "p/q" in lowest terms.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

}  // namespace cyclic
