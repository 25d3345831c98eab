#pragma once

// Labelled cyclic quivers with every node of rank one, (k,1) quivers with a
// fixed splitting type, and the symbolic descriptors of their moduli on P^1.
//
// Nodes are 0-based in code. For a cyclic quiver with node degrees
// d_0..d_{n-1} and twist t, arrow i goes from node i to node i+1 (mod n) and
// carries a section of O(d_{i+1} - d_i + t).

#include "cyclic/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace cyclic {

class CyclicQuiver {
public:
    /// Throws InvalidQuiver unless n >= 2 and t >= 0.
    CyclicQuiver(int twist, std::vector<int> node_degrees);

    int twist() const noexcept { return twist_; }
    int size() const noexcept { return static_cast<int>(degrees_.size()); }
    std::span<const int> degrees() const noexcept { return degrees_; }
    int degree(int node) const { return degrees_[static_cast<std::size_t>(node)]; }
    int total_degree() const;

    /// Degree of the line bundle carrying arrow i, i.e. d_{i+1} - d_i + t.
    int map_degree(int arrow) const;
    std::vector<int> map_degrees() const;

    Rational total_slope() const;
    /// gcd(n, sum d_i) == 1. Non-coprime quivers may have strictly semistable
    /// points, which this library does not model.
    bool coprime() const;

    /// Cyclic shift so that node r becomes node 0.
    CyclicQuiver rotated(int r) const;

    std::string to_string() const;

    friend bool operator==(const CyclicQuiver&, const CyclicQuiver&) = default;

private:
    int twist_;
    std::vector<int> degrees_;
};

/// The chain obtained by deleting the last arrow of a canonical cyclic quiver.
struct ATypeQuiver {
    int twist;
    std::vector<int> node_degrees;

    /// Degrees d_{i+1} - d_i + t of the n-1 chain arrows.
    std::vector<int> map_degrees() const;
    friend bool operator==(const ATypeQuiver&, const ATypeQuiver&) = default;
};

struct ModuliDescriptor {
    Integer eta;                     // sheets over the Hitchin base
    std::vector<int> nilcone_dims;   // exponents of the product of projective spaces
    int bundle_rank = 0;             // d_1 - d_n + t + 1
    int rep_dim = 0;
    int moduli_dim = 0;
    bool coprime = true;
};

/// True iff the quiver has a stable representation: either every arrow can be
/// nonzero, or some rotation gives a stable chain with the last arrow zero.
bool admits_stable(const CyclicQuiver& q);

/// The rotation in which the last arrow is the unique one allowed to vanish.
/// Among rotations whose chain (last arrow deleted) has nonnegative arrow
/// degrees, prefers stable chains, then semistable ones; ties go to the
/// lexicographically smallest degree list. Throws NoStableIndexing.
CyclicQuiver reindex_canonical(const CyclicQuiver& q);

bool is_canonical(const CyclicQuiver& q);

/// Sheet count: multinomial of nt over the arrow degrees. Requires a
/// canonical quiver (throws NotCanonical).
Integer eta(const CyclicQuiver& q);

ModuliDescriptor moduli_descriptor(const CyclicQuiver& q);

/// Requires a canonical quiver.
ATypeQuiver associated_a_type(const CyclicQuiver& q);

/// Type (k,1) cyclic quiver: a rank-k node splitting as O(a_1)+...+O(a_k) with
/// strictly decreasing a_i, a line-bundle node of degree d_2, twist t.
/// Odd arrow i carries O(d_2 - a_i + t), even arrow i carries O(a_i - d_2 + t).
class K1Quiver {
public:
    /// Throws InvalidSplitting unless the splitting is strictly decreasing,
    /// the total slope is below every a_i and d_2 - a_1 + t >= 0.
    K1Quiver(int twist, std::vector<int> splitting, int tail_degree);

    int twist() const noexcept { return twist_; }
    int rank() const noexcept { return static_cast<int>(splitting_.size()); }
    std::span<const int> splitting() const noexcept { return splitting_; }
    int split(int i) const { return splitting_[static_cast<std::size_t>(i)]; }
    int tail_degree() const noexcept { return tail_; }
    Rational total_slope() const;

    int odd_degree(int i) const { return tail_ - split(i) + twist_; }
    int even_degree(int i) const { return split(i) - tail_ + twist_; }

    std::string to_string() const;

    friend bool operator==(const K1Quiver&, const K1Quiver&) = default;

private:
    int twist_;
    std::vector<int> splitting_;
    int tail_;
};

/// A (1,1) cyclic quiver with nodes (d_1, d_2), d_1 > d_2, whose first arrow
/// has lost `reduction` dimensions of freedom.
struct AdjustedQuiver {
    int twist;
    int first_degree;
    int second_degree;
    int reduction;

    int first_map_degree() const { return second_degree - first_degree + twist; }
    int second_map_degree() const { return first_degree - second_degree + twist; }
    /// Points over a generic fibre: binom(2t - b, deg phi_1 - b).
    Integer fibre_count() const;
    /// The nilpotent cone is P^(deg phi_1 - b).
    int nilcone_dim() const;
    int moduli_dim() const;
};

}  // namespace cyclic
