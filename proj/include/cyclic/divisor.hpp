#pragma once

// Exact arithmetic for points, effective divisors and sections of O(d) on the
// projective line over the rationals.
//
// A binary form of degree d is stored by its coefficients c_0..c_d where c_j
// multiplies z^j w^(d-j). The affine point a = [a:1] is the zero of the linear
// form (z - a w) and the point at infinity [1:0] is the zero of w.

#include "cyclic/rational.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace cyclic {

/// A point of P^1(Q), kept normalized: either [a:1] or infinity = [1:0].
/// Points are totally ordered: affine points by coordinate, infinity last.
class ProjPoint {
public:
    static ProjPoint affine(Rational a);
    static ProjPoint infinity();
    /// Normalizes [a:b]; throws InvalidPoint for [0:0].
    static ProjPoint from_coords(const Rational& a, const Rational& b);

    bool is_infinity() const noexcept { return infinite_; }
    /// Affine coordinate; only meaningful when !is_infinity().
    const Rational& coordinate() const noexcept { return coord_; }

    /// "(a:1)" or "inf".
    std::string to_string() const;

    friend bool operator==(const ProjPoint& x, const ProjPoint& y);
    friend bool operator<(const ProjPoint& x, const ProjPoint& y);

private:
    ProjPoint(bool infinite, Rational coord) : infinite_(infinite), coord_(std::move(coord)) {}

    bool infinite_;
    Rational coord_;
};

inline bool operator!=(const ProjPoint& x, const ProjPoint& y) { return !(x == y); }

/// Effective divisor: finitely many points with positive multiplicities.
class Divisor {
public:
    using Map = std::map<ProjPoint, int>;

    Divisor() = default;

    /// Adds `multiplicity` copies of `p`; multiplicity must be positive.
    Divisor& add(const ProjPoint& p, int multiplicity = 1);

    int degree() const noexcept { return degree_; }
    int multiplicity(const ProjPoint& p) const;
    bool empty() const noexcept { return points_.empty(); }
    const Map& points() const noexcept { return points_; }

    /// Multiplicities in point order.
    std::vector<int> profile() const;
    /// True when every multiplicity is one.
    bool is_reduced() const;

    /// Multiset difference; requires divisor_contains(other, *this).
    Divisor minus(const Divisor& other) const;

    /// Space-separated points with "^m" for m > 1, e.g. "(0:1)^2 inf".
    std::string to_string() const;

    friend Divisor operator+(const Divisor& x, const Divisor& y);
    friend bool operator==(const Divisor& x, const Divisor& y) {
        return x.points_ == y.points_;
    }

private:
    Map points_;
    int degree_ = 0;
};

/// True iff every multiplicity in `small` is at most the one in `big`.
bool divisor_contains(const Divisor& small, const Divisor& big);

/// A global section of O(d): either the zero section or scale * (zero divisor),
/// where the divisor has degree exactly d (infinity is stored explicitly).
/// Only the zero section may have negative ambient degree.
class Section {
public:
    static Section zero(int ambient_degree);
    Section(Rational scale, Divisor zeros);

    bool is_zero() const noexcept { return scale_ == 0; }
    int degree() const noexcept { return degree_; }
    const Rational& scale() const noexcept { return scale_; }
    const Divisor& zeros() const noexcept { return zeros_; }

    Section with_scale(const Rational& scale) const;

    friend bool operator==(const Section& x, const Section& y) {
        return x.degree_ == y.degree_ && x.scale_ == y.scale_ && x.zeros_ == y.zeros_;
    }

private:
    Section() = default;

    int degree_ = 0;
    Rational scale_;
    Divisor zeros_;
};

/// Tensor product of sections: degrees add, scales multiply, divisors add.
Section mul(const Section& x, const Section& y);
inline Section operator*(const Section& x, const Section& y) { return mul(x, y); }

/// Binary form of fixed degree d >= 0 with coefficients c_0..c_d on z^j w^(d-j).
class CoeffForm {
public:
    /// The zero form of degree d.
    explicit CoeffForm(int degree);
    /// Takes ownership of c_0..c_d; the vector must be non-empty.
    explicit CoeffForm(std::vector<Rational> coeffs);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& operator[](int j) const { return coeffs_[static_cast<std::size_t>(j)]; }
    Rational& operator[](int j) { return coeffs_[static_cast<std::size_t>(j)]; }
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }
    /// Coefficient of z^d, i.e. the value at infinity.
    const Rational& top() const { return coeffs_.back(); }
    bool is_zero() const;

    /// Value of the dehomogenized polynomial at z = x (w = 1).
    Rational eval(const Rational& x) const;
    /// The form f(z, w + s z). Moves the point [1:s] of the original chart to
    /// infinity; substitute(-s) undoes it.
    CoeffForm substitute(const Rational& s) const;
    CoeffForm scaled(const Rational& factor) const;

    /// Multiplying by w^m: raises the degree by m and keeps the coefficients.
    CoeffForm times_w_power(int m) const;

    friend CoeffForm operator+(const CoeffForm& x, const CoeffForm& y);
    friend CoeffForm operator-(const CoeffForm& x, const CoeffForm& y);
    friend CoeffForm operator*(const CoeffForm& x, const CoeffForm& y);
    friend bool operator==(const CoeffForm& x, const CoeffForm& y) = default;

private:
    std::vector<Rational> coeffs_;
};

/// Expands scale * prod (z - a w) * w^(mult of infinity). Throws
/// DegreeMismatch for a zero section of negative degree.
CoeffForm to_coeffs(const Section& s);

/// Factors a form completely over Q. Throws IrrationalRoots when some
/// irreducible factor has degree > 1.
Section from_coeffs(const CoeffForm& f);

struct TopReduction {
    CoeffForm reduced;     // f + g * multiplier
    CoeffForm multiplier;  // degree deg f - deg g
};

/// Euclidean top reduction: chooses the multiplier so that the coefficients of
/// z^(deg f), ..., z^(deg f - m + 1) in f + g * multiplier vanish. Requires
/// deg f >= deg g and 0 <= m <= deg f - deg g + 1. Throws ChartDegenerate when
/// the top coefficient of g is zero.
TopReduction reduce_top(const CoeffForm& f, const CoeffForm& g, int m);

}  // namespace cyclic
