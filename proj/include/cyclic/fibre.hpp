#pragma once

// Points of the cyclic moduli space over a fixed point of the Hitchin base.

#include "cyclic/divisor.hpp"
#include "cyclic/quiver.hpp"
#include "cyclic/representation.hpp"

#include <span>
#include <vector>

namespace cyclic {

struct FibreSet {
    Section base_point;
    std::vector<CanonicalRep> points;
    bool is_nilcone = false;
    std::vector<int> nilcone_dims;  // only filled for the nilpotent cone
};

struct EnumerateOptions {
    /// Worker threads; 0 or 1 runs inline. The output order never depends on it.
    unsigned threads = 1;
};

/// Every ordered way of writing `d` as D_1 + ... + D_m with deg D_i = sizes[i].
/// Order: lexicographic in (D_1, ..., D_{m-1}), where a part compares by its
/// sorted point sequence (points ordered affine-ascending, infinity last).
/// Returns an empty list when the sizes are negative or do not sum to deg d.
std::vector<std::vector<Divisor>> split_divisor(const Divisor& d, std::span<const int> sizes,
                                                EnumerateOptions options = {});

/// One canonical representation per distribution of the zeros of gamma over
/// the arrows; the last arrow carries the scale of gamma. Requires a canonical
/// quiver (NotCanonical), deg gamma = nt (DegreeMismatch), gamma != 0
/// (ZeroGamma).
FibreSet enumerate_fibre(const CyclicQuiver& q, const Section& gamma, EnumerateOptions options = {});

/// Number of ordered splittings of a divisor with the given multiplicity
/// profile into parts of the given sizes, by generating-function convolution.
/// Throws ProfileMismatch if the profile has a nonpositive entry or its sum
/// differs from the sum of the sizes.
Integer count_splittings(std::span<const int> profile, std::span<const int> sizes);

/// Size of the fibre over any gamma whose zeros have this multiplicity profile.
Integer count_fibre(const CyclicQuiver& q, std::span<const int> profile);

struct NilconeDescriptor {
    /// The fibre over 0 is the product of P^dims[i].
    std::vector<int> projective_dims;
    /// The last arrow vanishes identically on this locus.
    bool last_map_zero = true;
};

NilconeDescriptor nilcone_fibre(const CyclicQuiver& q);

/// The nilpotent cone packaged as a FibreSet over gamma = 0 (no isolated points).
FibreSet nilcone_fibre_set(const CyclicQuiver& q);

}  // namespace cyclic
