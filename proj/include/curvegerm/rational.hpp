#pragma once

#include <gmpxx.h>

#include <string>

namespace curvegerm {

// Exact rational number; GMP keeps mpq values canonical (lowest terms,
// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// "a" or "a/b" with b > 1.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace curvegerm
