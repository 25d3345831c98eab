#pragma once

// Type (k,1) cyclic quivers: Hitchin image through the block determinant,
// Euclidean reduction of the odd maps by triangular automorphisms, and the
// decomposition into adjusted (1,1) factors.
//
// Summands are ordered O(a_1), ..., O(a_k), O(d_2). Odd map i goes from O(a_i)
// to O(d_2) and even map i from O(d_2) back to O(a_i), both 0-based here.

#include "cyclic/divisor.hpp"
#include "cyclic/higgs_field.hpp"
#include "cyclic/quiver.hpp"

#include <optional>
#include <vector>

namespace cyclic {

class K1Rep {
public:
    /// Throws DegreeMismatch unless there are k odd and k even maps of degrees
    /// d_2 - a_i + t and a_i - d_2 + t.
    K1Rep(K1Quiver quiver, std::vector<CoeffForm> odd, std::vector<CoeffForm> even);

    const K1Quiver& quiver() const noexcept { return quiver_; }
    int rank() const noexcept { return quiver_.rank(); }
    const CoeffForm& odd(int i) const { return odd_[static_cast<std::size_t>(i)]; }
    const CoeffForm& even(int i) const { return even_[static_cast<std::size_t>(i)]; }
    const std::vector<CoeffForm>& odd_maps() const noexcept { return odd_; }
    const std::vector<CoeffForm>& even_maps() const noexcept { return even_; }

    friend bool operator==(const K1Rep&, const K1Rep&) = default;

private:
    K1Quiver quiver_;
    std::vector<CoeffForm> odd_;
    std::vector<CoeffForm> even_;
};

HiggsMatrix k1_higgs_field(const K1Rep& r);

struct K1Characteristic {
    /// det(lambda Id - Phi), entry e on lambda^e.
    std::vector<CoeffForm> coefficients;
    /// Highest exponent below the leading one with a nonzero coefficient.
    std::optional<int> subleading_exponent;
    /// Minus the coefficient of lambda^(k-1), a form of degree 2t.
    CoeffForm gamma;
};

K1Characteristic k1_characteristic(const K1Rep& r);

/// sum_i odd_i * even_i, read off the determinant.
CoeffForm k1_hitchin_image(const K1Rep& r);

/// b_i = sum_{j<i} (a_j - a_i + 1).
std::vector<int> reduction_amounts(const K1Quiver& q);

struct DecompositionDescriptor {
    std::vector<AdjustedQuiver> factors;
    Integer cover_count;
    int special_locus_dim = 0;
    int moduli_dim = 0;
};

/// Throws InvalidSplitting if some reduction would use up an odd map entirely.
DecompositionDescriptor decompose(const K1Quiver& q);

struct Multiplier {
    int target;  // odd map receiving the multiple
    int source;  // odd map being multiplied, source < target
    CoeffForm psi;
};

struct K1Reduction {
    K1Rep rep;
    std::vector<Multiplier> multipliers;
    /// The chart sends [1:s] to infinity; s = 0 keeps infinity.
    int chart_shift = 0;
    ProjPoint base_point = ProjPoint::infinity();
};

/// Conjugates by the unitriangular automorphism so that the top b_i
/// coefficients of odd map i vanish in the chart (odd maps are changed by
/// multiples of earlier odd maps, even maps by the inverse). Throws
/// ZeroInteriorMap on a zero odd map, InvalidSplitting when some b_i exceeds
/// the degree of odd map i, ChartDegenerate when no chart works.
K1Reduction reduce_rep(const K1Rep& r);

struct K1FibreCount {
    bool special_locus = false;
    Integer count;
    int special_locus_dim = 0;
};

/// Splittings of the truncated residual divisor into the last odd and even
/// maps. nullopt means the residual vanishes: the fibre is a projective space.
K1FibreCount k1_fibre_count(const K1Quiver& q, const std::optional<std::vector<int>>& residual_profile);

/// Explicit (odd, even) pairs for the last summand given the truncated
/// residual section; the odd map gets the reduced zeros at `base_point`.
std::vector<std::pair<Section, Section>> k1_residual_splittings(const K1Quiver& q, const Section& residual,
                                                                const ProjPoint& base_point = ProjPoint::infinity());

}  // namespace cyclic
