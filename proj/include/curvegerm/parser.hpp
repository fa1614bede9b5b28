#pragma once

#include <string_view>

#include "curvegerm/polynomial.hpp"

namespace curvegerm {

inline constexpr unsigned kDefaultMaxDegree = 512;

/// Reads a polynomial in x and y:
///
///     poly   := term (('+'|'-') term)*        leading '-' allowed
///     term   := [coef] [mono]                 (not both empty)
///     coef   := int | int '/' posint
///     mono   := factor ('*'? factor)*
///     factor := ('x'|'y') ['^' posint]
///
/// Whitespace between tokens is ignored; a '*' between the coefficient and
/// the monomial is also accepted. Throws Error with kind SyntaxError,
/// UnknownVariable or DegreeTooLarge (total degree above max_degree).
Polynomial parse_polynomial(std::string_view text, unsigned max_degree = kDefaultMaxDegree);

}  // namespace curvegerm
