#include "cyclic/k1.hpp"

#include "cyclic/error.hpp"
#include "cyclic/fibre.hpp"
#include "cyclic/linear.hpp"

#include <numeric>

namespace cyclic {

K1Rep::K1Rep(K1Quiver quiver, std::vector<CoeffForm> odd, std::vector<CoeffForm> even)
    : quiver_(std::move(quiver)), odd_(std::move(odd)), even_(std::move(even)) {
    const int k = quiver_.rank();
    if (static_cast<int>(odd_.size()) != k || static_cast<int>(even_.size()) != k) {
        throw Error(ErrorKind::DegreeMismatch, "expected " + std::to_string(k) + " odd and " + std::to_string(k) +
                                                   " even maps");
    }
    for (int i = 0; i < k; ++i) {
        if (odd_[static_cast<std::size_t>(i)].degree() != quiver_.odd_degree(i)) {
            throw Error(ErrorKind::DegreeMismatch, "phi" + std::to_string(2 * i + 1) + " must have degree " +
                                                       std::to_string(quiver_.odd_degree(i)));
        }
        if (even_[static_cast<std::size_t>(i)].degree() != quiver_.even_degree(i)) {
            throw Error(ErrorKind::DegreeMismatch, "phi" + std::to_string(2 * i + 2) + " must have degree " +
                                                       std::to_string(quiver_.even_degree(i)));
        }
    }
}

HiggsMatrix k1_higgs_field(const K1Rep& r) {
    const auto k = static_cast<std::size_t>(r.rank());
    HiggsMatrix phi(k + 1, std::vector<std::optional<CoeffForm>>(k + 1));
    for (std::size_t i = 0; i < k; ++i) {
        phi[k][i] = r.odd(static_cast<int>(i));
        phi[i][k] = r.even(static_cast<int>(i));
    }
    return phi;
}

K1Characteristic k1_characteristic(const K1Rep& r) {
    const int k = r.rank();
    K1Characteristic out{characteristic_polynomial(k1_higgs_field(r), r.quiver().twist()), std::nullopt,
                         CoeffForm(2 * r.quiver().twist())};
    for (int e = k; e-- > 0;) {
        if (!out.coefficients[static_cast<std::size_t>(e)].is_zero()) {
            out.subleading_exponent = e;
            break;
        }
    }
    out.gamma = out.coefficients[static_cast<std::size_t>(k - 1)].scaled(-1);
    return out;
}

CoeffForm k1_hitchin_image(const K1Rep& r) { return k1_characteristic(r).gamma; }

std::vector<int> reduction_amounts(const K1Quiver& q) {
    std::vector<int> b;
    for (int i = 0; i < q.rank(); ++i) {
        int sum = 0;
        for (int j = 0; j < i; ++j) {
            sum += q.split(j) - q.split(i) + 1;
        }
        b.push_back(sum);
    }
    return b;
}

DecompositionDescriptor decompose(const K1Quiver& q) {
    const auto b = reduction_amounts(q);
    const int t = q.twist();
    DecompositionDescriptor out;
    for (int i = 0; i < q.rank(); ++i) {
        if (b[static_cast<std::size_t>(i)] > q.odd_degree(i)) {
            throw Error(ErrorKind::InvalidSplitting, "phi" + std::to_string(2 * i + 1) + " has only " +
                                                         std::to_string(q.odd_degree(i) + 1) +
                                                         " coefficients but the reduction removes " +
                                                         std::to_string(b[static_cast<std::size_t>(i)]));
        }
        AdjustedQuiver factor{t, q.split(i), q.tail_degree(), b[static_cast<std::size_t>(i)]};
        out.moduli_dim += factor.moduli_dim();
        out.factors.push_back(factor);
    }
    const AdjustedQuiver& last = out.factors.back();
    out.cover_count = last.fibre_count();
    out.special_locus_dim = last.nilcone_dim();
    return out;
}

namespace {

// Multipliers psi_j (j < i) making the top b coefficients of
// odd_i + sum_j odd_j psi_j vanish, all forms in the same chart.
std::optional<std::vector<CoeffForm>> solve_multipliers(const K1Quiver& q, const std::vector<CoeffForm>& odd, int i,
                                                        int b) {
    const int top = q.odd_degree(i);
    std::vector<int> offsets;
    int unknowns = 0;
    for (int j = 0; j < i; ++j) {
        offsets.push_back(unknowns);
        unknowns += q.split(j) - q.split(i) + 1;
    }
    if (unknowns != b) {
        throw Error(ErrorKind::InvalidSplitting, "reduction amount does not match the automorphism count");
    }
    RationalMatrix a(static_cast<std::size_t>(b), std::vector<Rational>(static_cast<std::size_t>(b)));
    std::vector<Rational> rhs(static_cast<std::size_t>(b));
    const auto& f = odd[static_cast<std::size_t>(i)];
    for (int row = 0; row < b; ++row) {
        const int p = top - row;
        rhs[static_cast<std::size_t>(row)] = -f[p];
        for (int j = 0; j < i; ++j) {
            const auto& g = odd[static_cast<std::size_t>(j)];
            const int e = q.split(j) - q.split(i);
            for (int l = 0; l <= e; ++l) {
                const int gp = p - l;
                if (gp >= 0 && gp <= g.degree()) {
                    a[static_cast<std::size_t>(row)][static_cast<std::size_t>(offsets[static_cast<std::size_t>(j)] + l)] = g[gp];
                }
            }
        }
    }
    auto x = solve_square(std::move(a), std::move(rhs));
    if (!x) {
        return std::nullopt;
    }
    std::vector<CoeffForm> psi;
    for (int j = 0; j < i; ++j) {
        const int e = q.split(j) - q.split(i);
        std::vector<Rational> c(x->begin() + offsets[static_cast<std::size_t>(j)],
                                x->begin() + offsets[static_cast<std::size_t>(j)] + e + 1);
        psi.emplace_back(std::move(c));
    }
    return psi;
}

}  // namespace

K1Reduction reduce_rep(const K1Rep& r) {
    const K1Quiver& q = r.quiver();
    const int k = q.rank();
    for (int i = 0; i < k; ++i) {
        if (r.odd(i).is_zero()) {
            throw Error(ErrorKind::ZeroInteriorMap, "phi" + std::to_string(2 * i + 1) + " is zero");
        }
    }
    const auto b = reduction_amounts(q);
    for (int i = 0; i < k; ++i) {
        if (b[static_cast<std::size_t>(i)] > q.odd_degree(i)) {
            throw Error(ErrorKind::InvalidSplitting, "phi" + std::to_string(2 * i + 1) +
                                                         " is too small for the reduction");
        }
    }
    if (k == 1) {
        return K1Reduction{r, {}, 0, ProjPoint::infinity()};
    }

    // A chart fails only where some solvability determinant vanishes; that
    // determinant is a polynomial in the shift of bounded degree.
    int tries = 1;
    for (int i = 0; i < k; ++i) {
        tries += b[static_cast<std::size_t>(i)] * (q.odd_degree(0) + 1);
    }

    for (int s = 0; s < tries; ++s) {
        std::vector<CoeffForm> chart;
        for (const auto& f : r.odd_maps()) {
            chart.push_back(f.substitute(s));
        }
        // psi[target][source]
        std::vector<std::vector<CoeffForm>> psi(static_cast<std::size_t>(k));
        bool ok = true;
        for (int i = 1; i < k && ok; ++i) {
            auto solved = solve_multipliers(q, chart, i, b[static_cast<std::size_t>(i)]);
            if (!solved) {
                ok = false;
                break;
            }
            for (auto& form : *solved) {
                psi[static_cast<std::size_t>(i)].push_back(form.substitute(-s));
            }
        }
        if (!ok) {
            continue;
        }

        K1Reduction out{r, {}, s, ProjPoint::from_coords(1, s)};
        std::vector<CoeffForm> odd = r.odd_maps();
        for (int i = 1; i < k; ++i) {
            for (int j = 0; j < i; ++j) {
                const auto& m = psi[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                odd[static_cast<std::size_t>(i)] = odd[static_cast<std::size_t>(i)] + r.odd(j) * m;
                out.multipliers.push_back(Multiplier{i, j, m});
            }
        }
        // Even maps by back substitution through the unitriangular matrix.
        std::vector<CoeffForm> even = r.even_maps();
        for (int i = k - 1; i >= 0; --i) {
            for (int l = i + 1; l < k; ++l) {
                const auto& m = psi[static_cast<std::size_t>(l)][static_cast<std::size_t>(i)];
                even[static_cast<std::size_t>(i)] = even[static_cast<std::size_t>(i)] - m * even[static_cast<std::size_t>(l)];
            }
        }
        out.rep = K1Rep(q, std::move(odd), std::move(even));
        return out;
    }
    throw Error(ErrorKind::ChartDegenerate, "no chart among " + std::to_string(tries) +
                                                " shifts makes the odd maps reducible");
}

K1FibreCount k1_fibre_count(const K1Quiver& q, const std::optional<std::vector<int>>& residual_profile) {
    const auto d = decompose(q);
    if (!residual_profile) {
        return K1FibreCount{true, 0, d.special_locus_dim};
    }
    const AdjustedQuiver& last = d.factors.back();
    const std::vector<int> sizes{last.first_map_degree() - last.reduction, last.second_map_degree()};
    return K1FibreCount{false, count_splittings(*residual_profile, sizes), d.special_locus_dim};
}

std::vector<std::pair<Section, Section>> k1_residual_splittings(const K1Quiver& q, const Section& residual,
                                                                const ProjPoint& base_point) {
    const auto d = decompose(q);
    const AdjustedQuiver& last = d.factors.back();
    const std::vector<int> sizes{last.first_map_degree() - last.reduction, last.second_map_degree()};
    if (residual.degree() != sizes[0] + sizes[1]) {
        throw Error(ErrorKind::DegreeMismatch, "residual must have degree " + std::to_string(sizes[0] + sizes[1]));
    }
    if (residual.is_zero()) {
        throw Error(ErrorKind::ZeroGamma, "zero residual: the fibre is the special locus");
    }
    std::vector<std::pair<Section, Section>> out;
    for (auto& parts : split_divisor(residual.zeros(), sizes)) {
        Divisor odd_zeros = parts[0];
        if (last.reduction > 0) {
            odd_zeros.add(base_point, last.reduction);
        }
        out.emplace_back(Section(1, std::move(odd_zeros)), Section(residual.scale(), std::move(parts[1])));
    }
    return out;
}

}  // namespace cyclic
