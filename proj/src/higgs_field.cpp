#include "cyclic/higgs_field.hpp"

#include "cyclic/error.hpp"

namespace cyclic {

namespace {

// Dehomogenized polynomial in z (w = 1), low to high, no trailing zeros.
using ZPoly = std::vector<Rational>;
// Polynomial in lambda with ZPoly coefficients.
using LambdaPoly = std::vector<ZPoly>;

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

ZPoly add(const ZPoly& x, const ZPoly& y) {
    ZPoly out(std::max(x.size(), y.size()));
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] += x[i];
    }
    for (std::size_t i = 0; i < y.size(); ++i) {
        out[i] += y[i];
    }
    trim(out);
    return out;
}

ZPoly mul(const ZPoly& x, const ZPoly& y) {
    if (x.empty() || y.empty()) {
        return {};
    }
    ZPoly out(x.size() + y.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < y.size(); ++j) {
            out[i + j] += x[i] * y[j];
        }
    }
    trim(out);
    return out;
}

LambdaPoly mul(const LambdaPoly& x, const LambdaPoly& y) {
    LambdaPoly out(x.size() + y.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < y.size(); ++j) {
            out[i + j] = add(out[i + j], mul(x[i], y[j]));
        }
    }
    return out;
}

void accumulate(LambdaPoly& acc, const LambdaPoly& term, int sign) {
    if (acc.size() < term.size()) {
        acc.resize(term.size());
    }
    for (std::size_t i = 0; i < term.size(); ++i) {
        ZPoly t = term[i];
        if (sign < 0) {
            for (auto& c : t) {
                c = -c;
            }
        }
        acc[i] = add(acc[i], t);
    }
}

ZPoly dehomogenize(const CoeffForm& f) {
    ZPoly p(f.coeffs().begin(), f.coeffs().end());
    trim(p);
    return p;
}

struct Expansion {
    const HiggsMatrix& phi;
    std::size_t n;
    std::vector<bool> used;
    LambdaPoly total;

    // Entry of (lambda Id - Phi) as a lambda-polynomial; empty if zero.
    LambdaPoly entry(std::size_t row, std::size_t col) const {
        LambdaPoly e(row == col ? 2 : 1);
        if (phi[row][col]) {
            ZPoly p = dehomogenize(*phi[row][col]);
            for (auto& c : p) {
                c = -c;
            }
            e[0] = std::move(p);
        }
        if (row == col) {
            e[1] = ZPoly{Rational(1)};
        }
        bool zero = true;
        for (const auto& c : e) {
            zero = zero && c.empty();
        }
        return zero ? LambdaPoly{} : e;
    }

    // Leibniz expansion, pruning structural zeros.
    void expand(std::size_t row, const LambdaPoly& product, int sign) {
        if (row == n) {
            accumulate(total, product, sign);
            return;
        }
        for (std::size_t col = 0; col < n; ++col) {
            if (used[col]) {
                continue;
            }
            LambdaPoly e = entry(row, col);
            if (e.empty()) {
                continue;
            }
            int inversions = 0;
            for (std::size_t c = col + 1; c < n; ++c) {
                inversions += used[c] ? 1 : 0;
            }
            used[col] = true;
            expand(row + 1, mul(product, e), (inversions % 2 == 0) ? sign : -sign);
            used[col] = false;
        }
    }
};

}  // namespace

std::vector<CoeffForm> characteristic_polynomial(const HiggsMatrix& phi, int twist) {
    const std::size_t n = phi.size();
    Expansion expansion{phi, n, std::vector<bool>(n, false), {}};
    expansion.expand(0, LambdaPoly{ZPoly{Rational(1)}}, 1);
    expansion.total.resize(n + 1);

    std::vector<CoeffForm> out;
    for (std::size_t e = 0; e <= n; ++e) {
        const int degree = static_cast<int>(n - e) * twist;
        const ZPoly& p = expansion.total[e];
        if (static_cast<int>(p.size()) > degree + 1) {
            throw Error(ErrorKind::DegreeMismatch, "Higgs field entries are not graded by the twist");
        }
        CoeffForm form(degree);
        for (std::size_t j = 0; j < p.size(); ++j) {
            form[static_cast<int>(j)] = p[j];
        }
        out.push_back(std::move(form));
    }
    return out;
}

HiggsMatrix cyclic_higgs_field(const CyclicRep& r) {
    const int n = r.size();
    HiggsMatrix phi(static_cast<std::size_t>(n), std::vector<std::optional<CoeffForm>>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        const Section& s = r.map(i);
        if (s.degree() < 0) {
            continue;
        }
        // arrow i maps summand i to summand i+1
        phi[static_cast<std::size_t>((i + 1) % n)][static_cast<std::size_t>(i)] = to_coeffs(s);
    }
    return phi;
}

}  // namespace cyclic
