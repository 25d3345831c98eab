#include "cyclic/divisor.hpp"

#include "cyclic/error.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace cyclic {

// ---------------------------------------------------------------------------
// ProjPoint

ProjPoint ProjPoint::affine(Rational a) {
    a.canonicalize();
    return ProjPoint(false, std::move(a));
}

ProjPoint ProjPoint::infinity() { return ProjPoint(true, Rational(0)); }

ProjPoint ProjPoint::from_coords(const Rational& a, const Rational& b) {
    if (b == 0) {
        if (a == 0) {
            throw Error(ErrorKind::InvalidPoint, "[0:0] is not a point of P^1");
        }
        return infinity();
    }
    return affine(Rational(a / b));
}

std::string ProjPoint::to_string() const {
    if (infinite_) {
        return "inf";
    }
    return "(" + cyclic::to_string(coord_) + ":1)";
}

bool operator==(const ProjPoint& x, const ProjPoint& y) {
    if (x.infinite_ || y.infinite_) {
        return x.infinite_ == y.infinite_;
    }
    return x.coord_ == y.coord_;
}

bool operator<(const ProjPoint& x, const ProjPoint& y) {
    if (x.infinite_) {
        return false;
    }
    if (y.infinite_) {
        return true;
    }
    return x.coord_ < y.coord_;
}

// ---------------------------------------------------------------------------
// Divisor

Divisor& Divisor::add(const ProjPoint& p, int multiplicity) {
    assert(multiplicity > 0);
    points_[p] += multiplicity;
    degree_ += multiplicity;
    return *this;
}

int Divisor::multiplicity(const ProjPoint& p) const {
    auto it = points_.find(p);
    return it == points_.end() ? 0 : it->second;
}

std::vector<int> Divisor::profile() const {
    std::vector<int> result;
    result.reserve(points_.size());
    for (const auto& [p, m] : points_) {
        result.push_back(m);
    }
    return result;
}

bool Divisor::is_reduced() const {
    return std::all_of(points_.begin(), points_.end(), [](const auto& e) { return e.second == 1; });
}

Divisor Divisor::minus(const Divisor& other) const {
    assert(divisor_contains(other, *this));
    Divisor result;
    for (const auto& [p, m] : points_) {
        int rest = m - other.multiplicity(p);
        if (rest > 0) {
            result.add(p, rest);
        }
    }
    return result;
}

std::string Divisor::to_string() const {
    std::string out;
    for (const auto& [p, m] : points_) {
        if (!out.empty()) {
            out += ' ';
        }
        out += p.to_string();
        if (m > 1) {
            out += '^' + std::to_string(m);
        }
    }
    return out;
}

Divisor operator+(const Divisor& x, const Divisor& y) {
    Divisor result = x;
    for (const auto& [p, m] : y.points_) {
        result.add(p, m);
    }
    return result;
}

bool divisor_contains(const Divisor& small, const Divisor& big) {
    for (const auto& [p, m] : small.points()) {
        if (big.multiplicity(p) < m) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Section

Section Section::zero(int ambient_degree) {
    Section s;
    s.degree_ = ambient_degree;
    s.scale_ = 0;
    return s;
}

Section::Section(Rational scale, Divisor zeros)
    : degree_(zeros.degree()), scale_(std::move(scale)), zeros_(std::move(zeros)) {
    scale_.canonicalize();
    if (scale_ == 0) {
        throw Error(ErrorKind::ZeroScalar, "a nonzero section needs a nonzero scale; use Section::zero");
    }
}

Section Section::with_scale(const Rational& scale) const {
    if (is_zero()) {
        return *this;
    }
    if (scale == 0) {
        return zero(degree_);
    }
    return Section(scale, zeros_);
}

Section mul(const Section& x, const Section& y) {
    if (x.is_zero() || y.is_zero()) {
        return Section::zero(x.degree() + y.degree());
    }
    return Section(Rational(x.scale() * y.scale()), x.zeros() + y.zeros());
}

// ---------------------------------------------------------------------------
// CoeffForm

CoeffForm::CoeffForm(int degree) : coeffs_(static_cast<std::size_t>(degree + 1)) {
    if (degree < 0) {
        throw Error(ErrorKind::DegreeMismatch, "binary forms need degree >= 0");
    }
}

CoeffForm::CoeffForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw Error(ErrorKind::DegreeMismatch, "binary forms need at least one coefficient");
    }
    for (auto& c : coeffs_) {
        c.canonicalize();
    }
}

bool CoeffForm::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

Rational CoeffForm::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

CoeffForm CoeffForm::substitute(const Rational& s) const {
    const int d = degree();
    CoeffForm out(d);
    if (s == 0) {
        return *this;
    }
    for (int j = 0; j <= d; ++j) {
        if (coeffs_[j] == 0) {
            continue;
        }
        // c_j z^j (w + s z)^(d-j)
        Rational spow = 1;
        for (int l = 0; l <= d - j; ++l) {
            out[j + l] += coeffs_[j] * Rational(binomial(d - j, l)) * spow;
            spow *= s;
        }
    }
    return out;
}

CoeffForm CoeffForm::scaled(const Rational& factor) const {
    CoeffForm out = *this;
    for (auto& c : out.coeffs_) {
        c *= factor;
    }
    return out;
}

CoeffForm CoeffForm::times_w_power(int m) const {
    std::vector<Rational> c = coeffs_;
    c.resize(coeffs_.size() + static_cast<std::size_t>(m));
    return CoeffForm(std::move(c));
}

CoeffForm operator+(const CoeffForm& x, const CoeffForm& y) {
    if (x.degree() != y.degree()) {
        throw Error(ErrorKind::DegreeMismatch, "cannot add forms of degree " + std::to_string(x.degree()) +
                                                   " and " + std::to_string(y.degree()));
    }
    CoeffForm out = x;
    for (int j = 0; j <= x.degree(); ++j) {
        out[j] += y[j];
    }
    return out;
}

CoeffForm operator-(const CoeffForm& x, const CoeffForm& y) { return x + y.scaled(-1); }

CoeffForm operator*(const CoeffForm& x, const CoeffForm& y) {
    CoeffForm out(x.degree() + y.degree());
    for (int i = 0; i <= x.degree(); ++i) {
        if (x[i] == 0) {
            continue;
        }
        for (int j = 0; j <= y.degree(); ++j) {
            out[i + j] += x[i] * y[j];
        }
    }
    return out;
}

CoeffForm to_coeffs(const Section& s) {
    if (s.is_zero()) {
        return CoeffForm(s.degree());
    }
    // Start from the constant form `scale` and multiply in linear factors.
    std::vector<Rational> acc{s.scale()};
    for (const auto& [p, m] : s.zeros().points()) {
        for (int k = 0; k < m; ++k) {
            std::vector<Rational> next(acc.size() + 1);
            for (std::size_t j = 0; j < acc.size(); ++j) {
                if (p.is_infinity()) {
                    next[j] += acc[j];  // times w
                } else {
                    next[j + 1] += acc[j];                   // times z
                    next[j] -= acc[j] * p.coordinate();      // times -a w
                }
            }
            acc = std::move(next);
        }
    }
    return CoeffForm(std::move(acc));
}

namespace {

using Poly = std::vector<Rational>;  // low to high, dehomogenized

// Trial-division divisors. Cofactors above the trial bound are treated as
// prime, so forms with huge coefficients may be misreported as irrational.
std::vector<Integer> positive_divisors(Integer n) {
    constexpr unsigned long kTrialBound = 1000000;
    n = abs(n);
    std::vector<std::pair<Integer, int>> factors;
    for (unsigned long p = 2; p <= kTrialBound && Integer(p) * p <= n; ++p) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
            int e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
                n /= p;
                ++e;
            }
            factors.emplace_back(Integer(p), e);
        }
    }
    if (n > 1) {
        factors.emplace_back(n, 1);
    }
    std::vector<Integer> divisors{1};
    for (const auto& [p, e] : factors) {
        const std::size_t base = divisors.size();
        Integer power = 1;
        for (int k = 1; k <= e; ++k) {
            power *= p;
            for (std::size_t i = 0; i < base; ++i) {
                divisors.push_back(divisors[i] * power);
            }
        }
    }
    return divisors;
}

Rational eval(const Poly& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

// Divides p by (z - r), assuming p(r) == 0.
Poly deflate(const Poly& p, const Rational& r) {
    const std::size_t e = p.size() - 1;
    Poly q(e);
    Rational carry = 0;
    for (std::size_t k = e; k >= 1; --k) {
        carry = p[k] + carry * r;
        q[k - 1] = carry;
    }
    return q;
}

// Extracts every rational root of p (p(0) != 0, deg >= 1) into `zeros`.
// Returns the unfactored remainder.
Poly extract_rational_roots(Poly p, Divisor& zeros) {
    auto take_linear = [&zeros](Poly& q) {
        if (q.size() == 2) {
            zeros.add(ProjPoint::affine(Rational(-q[0] / q[1])));
            q = Poly{q[1]};
        }
    };
    take_linear(p);
    if (p.size() <= 1) {
        return p;
    }
    Integer common = 1;
    for (const auto& c : p) {
        mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
    }
    const Rational lead_scaled = p.back() * common;
    const Rational constant_scaled = p.front() * common;
    const Integer lead = lead_scaled.get_num();
    const Integer constant = constant_scaled.get_num();
    const auto numerators = positive_divisors(constant);
    const auto denominators = positive_divisors(lead);
    for (const auto& q : denominators) {
        for (const auto& n : numerators) {
            if (p.size() <= 2) {
                break;
            }
            Integer g;
            mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t());
            if (g != 1) {
                continue;
            }
            for (int sign : {1, -1}) {
                Rational r(n * sign, q);
                r.canonicalize();
                while (p.size() > 1 && eval(p, r) == 0) {
                    p = deflate(p, r);
                    zeros.add(ProjPoint::affine(r));
                }
            }
        }
    }
    take_linear(p);
    return p;
}

}  // namespace

Section from_coeffs(const CoeffForm& f) {
    if (f.is_zero()) {
        return Section::zero(f.degree());
    }
    const int d = f.degree();
    int top = d;
    while (f[top] == 0) {
        --top;
    }
    int low = 0;
    while (f[low] == 0) {
        ++low;
    }
    Divisor zeros;
    if (d - top > 0) {
        zeros.add(ProjPoint::infinity(), d - top);
    }
    if (low > 0) {
        zeros.add(ProjPoint::affine(Rational(0)), low);
    }
    Poly p(f.coeffs().begin() + low, f.coeffs().begin() + top + 1);
    const Rational scale = p.back();
    for (auto& c : p) {
        c /= scale;
    }
    if (p.size() > 1) {
        Poly rest = extract_rational_roots(std::move(p), zeros);
        if (rest.size() > 1) {
            throw Error(ErrorKind::IrrationalRoots,
                        "form does not split into linear factors over Q (irreducible part of degree " +
                            std::to_string(rest.size() - 1) + ")");
        }
    }
    return Section(scale, std::move(zeros));
}

TopReduction reduce_top(const CoeffForm& f, const CoeffForm& g, int m) {
    const int df = f.degree();
    const int dg = g.degree();
    if (df < dg || m < 0 || m > df - dg + 1) {
        throw Error(ErrorKind::DegreeMismatch, "reduce_top needs deg f >= deg g and 0 <= m <= deg f - deg g + 1");
    }
    if (g.top() == 0) {
        throw Error(ErrorKind::ChartDegenerate, "top coefficient of the divisor form vanishes in this chart");
    }
    CoeffForm reduced = f;
    CoeffForm multiplier(df - dg);
    for (int pos = df; pos > df - m; --pos) {
        if (reduced[pos] == 0) {
            continue;
        }
        const int shift = pos - dg;
        Rational q = -reduced[pos] / g.top();
        multiplier[shift] += q;
        for (int j = 0; j <= dg; ++j) {
            reduced[shift + j] += q * g[j];
        }
    }
    return {std::move(reduced), std::move(multiplier)};
}

}  // namespace cyclic
