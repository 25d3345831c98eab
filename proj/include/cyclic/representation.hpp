#pragma once

// Representations of type (1,...,1) cyclic quivers on P^1: stability, Hitchin
// image, the (C^*)^(n-1) action and its canonical slice.

#include "cyclic/divisor.hpp"
#include "cyclic/quiver.hpp"

#include <span>
#include <vector>

namespace cyclic {

class CyclicRep {
public:
    /// Throws DegreeMismatch unless maps.size() == n and map i is a section of
    /// O(d_{i+1} - d_i + t).
    CyclicRep(CyclicQuiver quiver, std::vector<Section> maps);

    const CyclicQuiver& quiver() const noexcept { return quiver_; }
    std::span<const Section> maps() const noexcept { return maps_; }
    const Section& map(int i) const { return maps_[static_cast<std::size_t>(i)]; }
    int size() const noexcept { return quiver_.size(); }
    int zero_count() const;

    friend bool operator==(const CyclicRep&, const CyclicRep&) = default;

private:
    CyclicQuiver quiver_;
    std::vector<Section> maps_;
};

/// A representative of a torus orbit with maps 0..n-2 of scale one; the last
/// map carries the residual scalar. Only produced by canonical_form().
class CanonicalRep {
public:
    const CyclicRep& rep() const noexcept { return rep_; }

    friend bool operator==(const CanonicalRep&, const CanonicalRep&) = default;
    friend CanonicalRep canonical_form(const CyclicRep& r);

private:
    explicit CanonicalRep(CyclicRep rep) : rep_(std::move(rep)) {}

    CyclicRep rep_;
};

struct StabilityReport {
    bool stable = true;
    /// Nodes (0-based, increasing) of the most destabilizing invariant
    /// coordinate subbundle; empty when stable.
    std::vector<int> witness;
    Rational witness_slope;
    Rational total_slope;
};

/// Checks every proper, nonempty, arrow-closed set S of nodes
/// (i in S and map i nonzero implies i+1 in S) for slope(S) < total slope.
/// Runs in O(n) by splitting the cycle at the zero arrows.
StabilityReport stability(const CyclicRep& r);
bool is_stable(const CyclicRep& r);

/// gamma = phi_1 ... phi_n, so that det(lambda - Phi) = lambda^n - gamma.
Section hitchin_image(const CyclicRep& r);

/// phi_i -> lambda_i phi_i for i < n, phi_n -> (lambda_1...lambda_{n-1})^-1 phi_n.
/// Throws ZeroScalar on a zero scalar and DegreeMismatch on a wrong count.
CyclicRep torus_act(const CyclicRep& r, std::span<const Rational> scalars);

/// Throws ZeroInteriorMap if some map other than the last is zero.
CanonicalRep canonical_form(const CyclicRep& r);

/// Same torus orbit. Throws QuiverMismatch for different quivers.
bool equivalent(const CyclicRep& x, const CyclicRep& y);

/// Limit of c -> 0 along (phi_1, ..., phi_{n-1}, c phi_n).
CyclicRep flow_limit(const CyclicRep& r);

}  // namespace cyclic
