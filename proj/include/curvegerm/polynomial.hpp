#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "curvegerm/rational.hpp"

namespace curvegerm {

/// Exponent pair of x^degx y^degy.
struct Monomial {
    unsigned degx = 0;
    unsigned degy = 0;

    constexpr unsigned degree() const noexcept { return degx + degy; }
    constexpr bool divides(const Monomial& other) const noexcept {
        return degx <= other.degx && degy <= other.degy;
    }
    friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
};

constexpr Monomial operator*(const Monomial& a, const Monomial& b) noexcept {
    return {a.degx + b.degx, a.degy + b.degy};
}

/// Canonical (printing) order: total degree ascending, then degx ascending.
struct CanonicalOrder {
    constexpr bool operator()(const Monomial& a, const Monomial& b) const noexcept {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.degx < b.degx;
    }
};

/// Bivariate polynomial in x, y with exact rational coefficients.
///
/// Terms live in a map ordered by CanonicalOrder and zero coefficients are
/// never stored, so two equal polynomials have identical term maps.
class Polynomial {
   public:
    using Terms = std::map<Monomial, Rational, CanonicalOrder>;

    Polynomial() = default;
    explicit Polynomial(const Rational& constant);
    Polynomial(const Monomial& mono, const Rational& coefficient);

    static Polynomial x() { return {Monomial{1, 0}, 1}; }
    static Polynomial y() { return {Monomial{0, 1}, 1}; }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Rational coefficient(const Monomial& mono) const;
    Rational constant_term() const { return coefficient({0, 0}); }

    /// Largest total degree of a term; 0 for the zero polynomial.
    unsigned total_degree() const noexcept;
    unsigned degree_in_x() const noexcept;
    unsigned degree_in_y() const noexcept;

    /// Adds c·mono, erasing the entry if the coefficient cancels.
    void add_term(const Monomial& mono, const Rational& c);

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

   private:
    Terms terms_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

/// Minimal total degree of a term (the multiplicity at the origin).
/// Throws ZeroPolynomial for f = 0.
unsigned order(const Polynomial& f);

/// Homogeneous part of degree order(f) (the tangent cone).
Polynomial initial_form(const Polynomial& f);

Polynomial derivative_x(const Polynomial& f);
Polynomial derivative_y(const Polynomial& f);
std::pair<Polynomial, Polynomial> partials(const Polynomial& f);

/// Drops every term of total degree > max_degree.
Polynomial truncate(const Polynomial& f, unsigned max_degree);

/// Exactly divides by x^k; every term must have degx >= k.
Polynomial divide_by_x_power(const Polynomial& f, unsigned k);

/// Affine change of coordinates x ↦ a·x + b·y + e, y ↦ c·x + d·y + g.
struct AffineMap {
    Rational a = 1, b = 0;
    Rational c = 0, d = 1;
    Rational e = 0, g = 0;

    static AffineMap identity() { return {}; }
    static AffineMap linear(Rational a, Rational b, Rational c, Rational d) {
        return {std::move(a), std::move(b), std::move(c), std::move(d), 0, 0};
    }
    Rational determinant() const { return a * d - b * c; }
};

/// Composition f(A·(x, y) + t). Throws SingularMatrix when det A = 0.
Polynomial substitute_linear(const Polynomial& f, const AffineMap& map);

/// General composition f(p(x, y), q(x, y)).
Polynomial compose(const Polynomial& f, const Polynomial& p, const Polynomial& q);

/// Terms in canonical order, printed so that parse_polynomial reads it back.
std::string to_string(const Polynomial& f);

}  // namespace curvegerm
