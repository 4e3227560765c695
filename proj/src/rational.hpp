#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "errors.hpp"

namespace skv {

// Exact rational scalar.  GMP's mpq_class already maintains the invariants we
// need (normalized fraction, positive denominator, 0 = 0/1), so it is used
// directly rather than wrapped.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) fail(ErrorKind::DivisionByZero, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "num", "-num" or "num/den" with arbitrary-precision parts.
// Throws Parse on malformed text and NonRational on a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Rational field_inverse(const Rational& q) {
  if (is_zero(q)) fail(ErrorKind::DivisionByZero, "inverse of rational zero");
  return Rational(1) / q;
}

}  // namespace skv
