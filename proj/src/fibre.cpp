#include "cyclic/fibre.hpp"

#include "cyclic/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

namespace cyclic {

namespace {

using Counts = std::vector<int>;

// Sub-multisets of `avail` with `size` elements, in lexicographic order of
// their sorted point sequences: earlier points take their largest count first.
template <typename F>
void for_each_submultiset(const Counts& avail, int size, F&& visit) {
    const std::size_t m = avail.size();
    std::vector<int> suffix(m + 1, 0);
    for (std::size_t i = m; i-- > 0;) {
        suffix[i] = suffix[i + 1] + avail[i];
    }
    Counts chosen(m, 0);
    auto recurse = [&](auto&& self, std::size_t pos, int remaining) -> void {
        if (remaining == 0) {
            visit(static_cast<const Counts&>(chosen));
            return;
        }
        if (pos == m || suffix[pos] < remaining) {
            return;
        }
        for (int c = std::min(avail[pos], remaining); c >= 0; --c) {
            if (suffix[pos + 1] < remaining - c) {
                break;
            }
            chosen[pos] = c;
            self(self, pos + 1, remaining - c);
        }
        chosen[pos] = 0;
    };
    recurse(recurse, 0, size);
}

struct Splitter {
    std::vector<ProjPoint> support;
    std::span<const int> sizes;

    Divisor to_divisor(const Counts& counts) const {
        Divisor d;
        for (std::size_t i = 0; i < counts.size(); ++i) {
            if (counts[i] > 0) {
                d.add(support[i], counts[i]);
            }
        }
        return d;
    }

    void split_from(std::size_t part, const Counts& avail, std::vector<Divisor>& prefix,
                    std::vector<std::vector<Divisor>>& out) const {
        if (part + 1 == sizes.size()) {
            prefix.push_back(to_divisor(avail));
            out.push_back(prefix);
            prefix.pop_back();
            return;
        }
        for_each_submultiset(avail, sizes[part], [&](const Counts& chosen) {
            Counts rest = avail;
            for (std::size_t i = 0; i < rest.size(); ++i) {
                rest[i] -= chosen[i];
            }
            prefix.push_back(to_divisor(chosen));
            split_from(part + 1, rest, prefix, out);
            prefix.pop_back();
        });
    }
};

}  // namespace

std::vector<std::vector<Divisor>> split_divisor(const Divisor& d, std::span<const int> sizes,
                                                EnumerateOptions options) {
    if (sizes.empty() || std::any_of(sizes.begin(), sizes.end(), [](int s) { return s < 0; }) ||
        std::accumulate(sizes.begin(), sizes.end(), 0) != d.degree()) {
        return {};
    }
    Splitter splitter;
    splitter.sizes = sizes;
    Counts avail;
    for (const auto& [p, m] : d.points()) {
        splitter.support.push_back(p);
        avail.push_back(m);
    }
    if (sizes.size() == 1) {
        return {{d}};
    }

    // Partition on the first part; each worker fills its own slots and the
    // slots are concatenated in order.
    std::vector<Counts> firsts;
    for_each_submultiset(avail, sizes[0], [&](const Counts& chosen) { firsts.push_back(chosen); });
    std::vector<std::vector<std::vector<Divisor>>> slots(firsts.size());
    auto work = [&](std::size_t index) {
        Counts rest = avail;
        for (std::size_t i = 0; i < rest.size(); ++i) {
            rest[i] -= firsts[index][i];
        }
        std::vector<Divisor> prefix{splitter.to_divisor(firsts[index])};
        splitter.split_from(1, rest, prefix, slots[index]);
    };
    const std::size_t workers = std::min<std::size_t>(std::max(1u, options.threads), firsts.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < firsts.size(); ++i) {
            work(i);
        }
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < firsts.size(); i += workers) {
                    work(i);
                }
            });
        }
    }
    std::vector<std::vector<Divisor>> out;
    for (auto& slot : slots) {
        for (auto& split : slot) {
            out.push_back(std::move(split));
        }
    }
    return out;
}

FibreSet enumerate_fibre(const CyclicQuiver& q, const Section& gamma, EnumerateOptions options) {
    if (!is_canonical(q)) {
        throw Error(ErrorKind::NotCanonical, "quiver " + q.to_string() + " is not in canonical indexing");
    }
    const int nt = q.size() * q.twist();
    if (gamma.degree() != nt) {
        throw Error(ErrorKind::DegreeMismatch, "gamma must be a section of O(" + std::to_string(nt) + "), got degree " +
                                                   std::to_string(gamma.degree()));
    }
    if (gamma.is_zero()) {
        throw Error(ErrorKind::ZeroGamma, "gamma = 0 is the nilpotent cone; use nilcone_fibre");
    }
    const auto sizes = q.map_degrees();
    FibreSet out{gamma, {}, false, {}};
    for (auto& parts : split_divisor(gamma.zeros(), sizes, options)) {
        std::vector<Section> maps;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const Rational scale = (i + 1 == parts.size()) ? gamma.scale() : Rational(1);
            maps.emplace_back(scale, std::move(parts[i]));
        }
        out.points.push_back(canonical_form(CyclicRep(q, std::move(maps))));
    }
    return out;
}

Integer count_splittings(std::span<const int> profile, std::span<const int> sizes) {
    for (int m : profile) {
        if (m <= 0) {
            throw Error(ErrorKind::ProfileMismatch, "multiplicities must be positive");
        }
    }
    const int total = std::accumulate(profile.begin(), profile.end(), 0);
    if (total != std::accumulate(sizes.begin(), sizes.end(), 0)) {
        throw Error(ErrorKind::ProfileMismatch, "profile sums to " + std::to_string(total) +
                                                    " but the parts need " +
                                                    std::to_string(std::accumulate(sizes.begin(), sizes.end(), 0)));
    }
    if (std::any_of(sizes.begin(), sizes.end(), [](int s) { return s < 0; })) {
        return 0;
    }
    // Coefficient of prod x_i^sizes[i] in prod over points of h_m(x), where
    // h_m is the complete homogeneous polynomial: each point spreads its
    // multiplicity over the parts.
    const std::size_t parts = sizes.size();
    std::map<std::vector<int>, Integer> states{{std::vector<int>(parts, 0), Integer(1)}};
    for (int m : profile) {
        std::map<std::vector<int>, Integer> next;
        for (const auto& [fill, ways] : states) {
            std::vector<int> add(parts, 0);
            auto spread = [&](auto&& self, std::size_t i, int left) -> void {
                if (i + 1 == parts) {
                    if (fill[i] + left > sizes[i]) {
                        return;
                    }
                    add[i] = left;
                    std::vector<int> key(parts);
                    for (std::size_t k = 0; k < parts; ++k) {
                        key[k] = fill[k] + add[k];
                    }
                    next[key] += ways;
                    return;
                }
                for (int c = 0; c <= left && fill[i] + c <= sizes[i]; ++c) {
                    add[i] = c;
                    self(self, i + 1, left - c);
                }
            };
            spread(spread, 0, m);
        }
        states = std::move(next);
    }
    auto it = states.find(std::vector<int>(sizes.begin(), sizes.end()));
    return it == states.end() ? Integer(0) : it->second;
}

Integer count_fibre(const CyclicQuiver& q, std::span<const int> profile) {
    if (!is_canonical(q)) {
        throw Error(ErrorKind::NotCanonical, "quiver " + q.to_string() + " is not in canonical indexing");
    }
    const auto sizes = q.map_degrees();
    return count_splittings(profile, sizes);
}

NilconeDescriptor nilcone_fibre(const CyclicQuiver& q) {
    if (!is_canonical(q)) {
        throw Error(ErrorKind::NotCanonical, "quiver " + q.to_string() + " is not in canonical indexing");
    }
    auto dims = q.map_degrees();
    dims.pop_back();
    return NilconeDescriptor{std::move(dims), true};
}

FibreSet nilcone_fibre_set(const CyclicQuiver& q) {
    auto descriptor = nilcone_fibre(q);
    return FibreSet{Section::zero(q.size() * q.twist()), {}, true, std::move(descriptor.projective_dims)};
}

}  // namespace cyclic
