#include "cyclic/representation.hpp"

#include "cyclic/error.hpp"

#include <algorithm>
#include <array>
#include <optional>

namespace cyclic {

CyclicRep::CyclicRep(CyclicQuiver quiver, std::vector<Section> maps)
    : quiver_(std::move(quiver)), maps_(std::move(maps)) {
    if (static_cast<int>(maps_.size()) != quiver_.size()) {
        throw Error(ErrorKind::DegreeMismatch, "expected " + std::to_string(quiver_.size()) + " maps, got " +
                                                   std::to_string(maps_.size()));
    }
    for (int i = 0; i < quiver_.size(); ++i) {
        const int expected = quiver_.map_degree(i);
        if (map(i).degree() != expected) {
            throw Error(ErrorKind::DegreeMismatch, "phi" + std::to_string(i + 1) + " must be a section of O(" +
                                                       std::to_string(expected) + "), got degree " +
                                                       std::to_string(map(i).degree()));
        }
    }
}

int CyclicRep::zero_count() const {
    return static_cast<int>(std::count_if(maps_.begin(), maps_.end(), [](const Section& s) { return s.is_zero(); }));
}

namespace {

struct Choice {
    long weight = 0;
    std::vector<int> nodes;
};

// DP state index: bit 0 = some node chosen, bit 1 = some node left out.
using States = std::array<std::optional<Choice>, 4>;

void relax(States& next, int state, const Choice& base, long weight, const std::vector<int>& extra) {
    long total = base.weight + weight;
    if (next[state] && next[state]->weight >= total) {
        return;
    }
    Choice c{total, base.nodes};
    c.nodes.insert(c.nodes.end(), extra.begin(), extra.end());
    next[state] = std::move(c);
}

}  // namespace

StabilityReport stability(const CyclicRep& r) {
    const CyclicQuiver& q = r.quiver();
    const int n = q.size();
    StabilityReport report;
    report.total_slope = q.total_slope();

    std::vector<int> zero_arrows;
    for (int i = 0; i < n; ++i) {
        if (r.map(i).is_zero()) {
            zero_arrows.push_back(i);
        }
    }
    if (zero_arrows.empty()) {
        return report;  // the only invariant coordinate subbundle is everything
    }

    const long total = q.total_degree();
    States states;
    states[0] = Choice{};
    for (std::size_t z = 0; z < zero_arrows.size(); ++z) {
        // Segment of nodes closed by zero arrow `end`, starting after the
        // previous zero arrow (cyclically).
        const int end = zero_arrows[z];
        const int prev = zero_arrows[(z + zero_arrows.size() - 1) % zero_arrows.size()];
        int start = (prev + 1) % n;
        std::vector<int> segment;
        for (int v = start;; v = (v + 1) % n) {
            segment.push_back(v);
            if (v == end) {
                break;
            }
        }
        States next;
        for (int s = 0; s < 4; ++s) {
            if (!states[s]) {
                continue;
            }
            relax(next, s | 2, *states[s], 0, {});  // take nothing
            long weight = 0;
            std::vector<int> tail;
            for (std::size_t k = segment.size(); k-- > 0;) {
                const int v = segment[k];
                weight += static_cast<long>(n) * q.degree(v) - total;
                tail.insert(tail.begin(), v);
                const bool full = (k == 0);
                relax(next, s | 1 | (full ? 0 : 2), *states[s], weight, tail);
            }
        }
        states = std::move(next);
    }

    const auto& best = states[3];
    if (best && best->weight >= 0) {
        report.stable = false;
        report.witness = best->nodes;
        std::sort(report.witness.begin(), report.witness.end());
        long degree_sum = 0;
        for (int v : report.witness) {
            degree_sum += q.degree(v);
        }
        report.witness_slope = Rational(degree_sum, static_cast<long>(report.witness.size()));
        report.witness_slope.canonicalize();
    }
    return report;
}

bool is_stable(const CyclicRep& r) { return stability(r).stable; }

Section hitchin_image(const CyclicRep& r) {
    Section gamma = r.map(0);
    for (int i = 1; i < r.size(); ++i) {
        gamma = mul(gamma, r.map(i));
    }
    return gamma;
}

CyclicRep torus_act(const CyclicRep& r, std::span<const Rational> scalars) {
    const int n = r.size();
    if (static_cast<int>(scalars.size()) != n - 1) {
        throw Error(ErrorKind::DegreeMismatch, "torus action needs " + std::to_string(n - 1) + " scalars");
    }
    Rational product = 1;
    std::vector<Section> maps;
    for (int i = 0; i + 1 < n; ++i) {
        if (scalars[i] == 0) {
            throw Error(ErrorKind::ZeroScalar, "torus scalars must be nonzero");
        }
        product *= scalars[i];
        maps.push_back(r.map(i).with_scale(r.map(i).scale() * scalars[i]));
    }
    maps.push_back(r.map(n - 1).with_scale(r.map(n - 1).scale() / product));
    return CyclicRep(r.quiver(), std::move(maps));
}

CanonicalRep canonical_form(const CyclicRep& r) {
    const int n = r.size();
    Rational product = 1;
    std::vector<Section> maps;
    for (int i = 0; i + 1 < n; ++i) {
        if (r.map(i).is_zero()) {
            throw Error(ErrorKind::ZeroInteriorMap,
                        "phi" + std::to_string(i + 1) + " is zero; only the last map may vanish");
        }
        product *= r.map(i).scale();
        maps.push_back(r.map(i).with_scale(1));
    }
    maps.push_back(r.map(n - 1).with_scale(r.map(n - 1).scale() * product));
    return CanonicalRep(CyclicRep(r.quiver(), std::move(maps)));
}

bool equivalent(const CyclicRep& x, const CyclicRep& y) {
    if (!(x.quiver() == y.quiver())) {
        throw Error(ErrorKind::QuiverMismatch, "representations of different quivers");
    }
    const int n = x.size();
    for (int i = 0; i < n; ++i) {
        if (x.map(i).is_zero() != y.map(i).is_zero()) {
            return false;
        }
        if (!x.map(i).is_zero() && !(x.map(i).zeros() == y.map(i).zeros())) {
            return false;
        }
    }
    // A zero interior map leaves its scalar free, which absorbs the last scale.
    Rational product = 1;
    for (int i = 0; i + 1 < n; ++i) {
        if (x.map(i).is_zero()) {
            return true;
        }
        product *= y.map(i).scale() / x.map(i).scale();
    }
    if (x.map(n - 1).is_zero()) {
        return true;
    }
    return y.map(n - 1).scale() == x.map(n - 1).scale() / product;
}

CyclicRep flow_limit(const CyclicRep& r) {
    std::vector<Section> maps(r.maps().begin(), r.maps().end());
    maps.back() = Section::zero(maps.back().degree());
    return CyclicRep(r.quiver(), std::move(maps));
}

}  // namespace cyclic
