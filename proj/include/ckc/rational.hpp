#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ckc {

/// Exact rational scalar. GMP keeps every result canonical (lowest terms,
/// positive denominator); values built from literals go through
/// parse_rational, which canonicalizes as well.
using Rational = mpq_class;

/// Always "numerator/denominator", including integers ("3/1", "0/1").
std::string to_string(const Rational& q);

/// Accepts "p/q", "p", with optional leading '-'. Throws InvalidInput.
Rational parse_rational(std::string_view text);

/// Sum of a subset of values, selected by index.
Rational sum_at(std::span<const Rational> values, std::span<const int> indices);

/// Least common multiple of the denominators.
mpz_class common_denominator(std::span<const Rational> values);

/// num / den in lowest terms. den must be nonzero.
inline Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace ckc
