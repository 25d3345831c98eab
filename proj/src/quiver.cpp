#include "cyclic/quiver.hpp"

#include "cyclic/error.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace cyclic {

namespace {

std::string join(std::span<const int> values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(values[i]);
    }
    return out;
}

enum class ChainQuality { Invalid, Semistable, Stable };

// Quality of the chain obtained by deleting the last arrow: arrows 0..n-2 need
// nonnegative degree, and every tail {k..n-1} (k >= 1) must have slope below
// (or equal to) the total slope. With integer weights n*d_i - sum d, a tail is
// destabilizing iff its weight sum is >= 0.
ChainQuality chain_quality(const CyclicQuiver& q) {
    const int n = q.size();
    for (int i = 0; i + 1 < n; ++i) {
        if (q.map_degree(i) < 0) {
            return ChainQuality::Invalid;
        }
    }
    const long total = q.total_degree();
    long tail = 0;
    bool strict = true;
    for (int k = n - 1; k >= 1; --k) {
        tail += static_cast<long>(n) * q.degree(k) - total;
        if (tail > 0) {
            return ChainQuality::Invalid;
        }
        if (tail == 0) {
            strict = false;
        }
    }
    return strict ? ChainQuality::Stable : ChainQuality::Semistable;
}

std::optional<CyclicQuiver> best_rotation(const CyclicQuiver& q) {
    std::optional<CyclicQuiver> best;
    ChainQuality best_quality = ChainQuality::Invalid;
    for (int r = 0; r < q.size(); ++r) {
        CyclicQuiver candidate = q.rotated(r);
        ChainQuality quality = chain_quality(candidate);
        if (quality == ChainQuality::Invalid) {
            continue;
        }
        if (!best || quality > best_quality ||
            (quality == best_quality &&
             std::lexicographical_compare(candidate.degrees().begin(), candidate.degrees().end(),
                                          best->degrees().begin(), best->degrees().end()))) {
            best = std::move(candidate);
            best_quality = quality;
        }
    }
    return best;
}

void require_canonical(const CyclicQuiver& q) {
    if (!is_canonical(q)) {
        throw Error(ErrorKind::NotCanonical, "quiver " + q.to_string() + " is not in canonical indexing");
    }
}

}  // namespace

CyclicQuiver::CyclicQuiver(int twist, std::vector<int> node_degrees)
    : twist_(twist), degrees_(std::move(node_degrees)) {
    if (degrees_.size() < 2) {
        throw Error(ErrorKind::InvalidQuiver, "a cyclic quiver needs at least two nodes");
    }
    if (twist_ < 0) {
        throw Error(ErrorKind::InvalidQuiver, "twist degree must be nonnegative");
    }
}

int CyclicQuiver::total_degree() const { return std::accumulate(degrees_.begin(), degrees_.end(), 0); }

int CyclicQuiver::map_degree(int arrow) const {
    const int n = size();
    return degree((arrow + 1) % n) - degree(arrow) + twist_;
}

std::vector<int> CyclicQuiver::map_degrees() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) {
        out.push_back(map_degree(i));
    }
    return out;
}

Rational CyclicQuiver::total_slope() const {
    Rational mu(total_degree(), size());
    mu.canonicalize();
    return mu;
}

bool CyclicQuiver::coprime() const { return std::gcd(size(), std::abs(total_degree())) == 1; }

CyclicQuiver CyclicQuiver::rotated(int r) const {
    std::vector<int> out(degrees_);
    std::rotate(out.begin(), out.begin() + (r % size()), out.end());
    return CyclicQuiver(twist_, std::move(out));
}

std::string CyclicQuiver::to_string() const {
    return "cyclic t=" + std::to_string(twist_) + " nodes=(" + join(degrees_) + ")";
}

std::vector<int> ATypeQuiver::map_degrees() const {
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < node_degrees.size(); ++i) {
        out.push_back(node_degrees[i + 1] - node_degrees[i] + twist);
    }
    return out;
}

bool admits_stable(const CyclicQuiver& q) {
    const auto degrees = q.map_degrees();
    if (std::all_of(degrees.begin(), degrees.end(), [](int d) { return d >= 0; })) {
        return true;  // all arrows nonzero: no proper invariant subbundle
    }
    for (int r = 0; r < q.size(); ++r) {
        if (chain_quality(q.rotated(r)) == ChainQuality::Stable) {
            return true;
        }
    }
    return false;
}

CyclicQuiver reindex_canonical(const CyclicQuiver& q) {
    if (!admits_stable(q)) {
        throw Error(ErrorKind::NoStableIndexing, "quiver " + q.to_string() + " admits no stable representation");
    }
    auto best = best_rotation(q);
    if (!best) {
        throw Error(ErrorKind::NoStableIndexing, "no rotation of " + q.to_string() + " has a semistable chain");
    }
    return *best;
}

bool is_canonical(const CyclicQuiver& q) {
    if (!admits_stable(q)) {
        return false;
    }
    auto best = best_rotation(q);
    return best && *best == q;
}

Integer eta(const CyclicQuiver& q) {
    require_canonical(q);
    const auto parts = q.map_degrees();
    return multinomial(parts);
}

ModuliDescriptor moduli_descriptor(const CyclicQuiver& q) {
    require_canonical(q);
    const int n = q.size();
    const auto parts = q.map_degrees();
    ModuliDescriptor out;
    out.eta = multinomial(parts);
    out.nilcone_dims.assign(parts.begin(), parts.end() - 1);
    out.bundle_rank = parts.back() + 1;
    out.rep_dim = 0;
    for (int p : parts) {
        out.rep_dim += p + 1;
    }
    out.moduli_dim = out.rep_dim - (n - 1);
    out.coprime = q.coprime();
    return out;
}

ATypeQuiver associated_a_type(const CyclicQuiver& q) {
    require_canonical(q);
    return ATypeQuiver{q.twist(), std::vector<int>(q.degrees().begin(), q.degrees().end())};
}

// ---------------------------------------------------------------------------
// (k,1) quivers

K1Quiver::K1Quiver(int twist, std::vector<int> splitting, int tail_degree)
    : twist_(twist), splitting_(std::move(splitting)), tail_(tail_degree) {
    if (twist_ < 0) {
        throw Error(ErrorKind::InvalidSplitting, "twist degree must be nonnegative");
    }
    if (splitting_.empty()) {
        throw Error(ErrorKind::InvalidSplitting, "splitting type must be nonempty");
    }
    for (std::size_t i = 0; i + 1 < splitting_.size(); ++i) {
        if (splitting_[i] <= splitting_[i + 1]) {
            throw Error(ErrorKind::InvalidSplitting,
                        "splitting (" + join(splitting_) + ") must be strictly decreasing");
        }
    }
    if (!(total_slope() < splitting_.back())) {
        throw Error(ErrorKind::InvalidSplitting, "total slope " + cyclic::to_string(total_slope()) +
                                                     " must be below every splitting degree");
    }
    if (odd_degree(0) < 0) {
        throw Error(ErrorKind::InvalidSplitting,
                    "d_2 - a_1 + t = " + std::to_string(odd_degree(0)) + " must be nonnegative");
    }
}

Rational K1Quiver::total_slope() const {
    const int sum = std::accumulate(splitting_.begin(), splitting_.end(), tail_);
    Rational mu(sum, rank() + 1);
    mu.canonicalize();
    return mu;
}

std::string K1Quiver::to_string() const {
    return "k1 t=" + std::to_string(twist_) + " split=(" + join(splitting_) + ") tail=" + std::to_string(tail_);
}

Integer AdjustedQuiver::fibre_count() const {
    return binomial(2L * twist - reduction, first_map_degree() - reduction);
}

int AdjustedQuiver::nilcone_dim() const { return first_map_degree() - reduction; }

int AdjustedQuiver::moduli_dim() const {
    return (first_map_degree() + 1 - reduction) + (second_map_degree() + 1) - 1;
}

}  // namespace cyclic
