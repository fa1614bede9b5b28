#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "curvegerm/polynomial.hpp"

namespace curvegerm {

/// Negative-degree order with lexicographic tie break (x > y). Monomials of
/// smaller total degree are larger, so 1 is the largest monomial and the
/// leading term of a polynomial is one of its lowest-degree terms.
struct LocalOrder {
    /// True when a is strictly larger than b.
    static constexpr bool greater(const Monomial& a, const Monomial& b) noexcept {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.degx > b.degx;
    }
};

/// Leading monomial with respect to LocalOrder; f must be nonzero.
Monomial local_leading_monomial(const Polynomial& f);

/// Standard basis of an ideal of the local ring Q[x,y] localized at the origin.
struct StandardBasis {
    std::vector<Polynomial> generators;
    /// Leading exponents of the generators, sorted by CanonicalOrder, no duplicates.
    std::vector<Monomial> leading_exponents;
    /// Set when the basis was completed modulo m^d: every monomial of degree d
    /// lies in the ideal and terms of degree >= d were discarded.
    std::optional<unsigned> truncation_degree;
};

/// Mora tangent-cone algorithm. Throws ZeroIdeal when every generator is zero.
StandardBasis standard_basis(const std::vector<Polynomial>& generators);

/// Monomials outside the leading ideal; nullopt when that set is infinite.
std::optional<std::vector<Monomial>> staircase(const StandardBasis& basis);

/// Dimension of the quotient of the local ring by the ideal; nullopt means infinite.
std::optional<std::size_t> colength(const StandardBasis& basis);

/// Colength of (df/dx, df/dy). Throws ZeroPolynomial, NotAGerm (f(0,0) != 0)
/// or NonIsolatedSingularity.
std::size_t milnor_number(const Polynomial& f);

/// Colength of (f, df/dx, df/dy). Same preconditions as milnor_number.
std::size_t tjurina_number(const Polynomial& f);

std::vector<Polynomial> milnor_ideal(const Polynomial& f);
std::vector<Polynomial> tjurina_ideal(const Polynomial& f);

/// Codimension in Q[x,y]_{<=cap} of the span of all truncated monomial
/// multiples x^i y^j g, computed by exact elimination. This equals the
/// colength of I + m^(cap+1).
std::size_t truncated_codimension(const std::vector<Polynomial>& generators, unsigned cap);

/// Independent oracle for colength: truncated codimensions at cap - 1 and
/// cap. When they agree m^cap lies in the ideal (Nakayama), so the value is
/// the exact colength; otherwise nullopt (unstable). Requires cap >= 2.
std::optional<std::size_t> colength_oracle(const std::vector<Polynomial>& generators, unsigned cap);

}  // namespace curvegerm
