#pragma once

#include <array>
#include <string>

#include "rational.hpp"
#include "rng.hpp"

namespace skv {

// The base tower:
//
//   K = Q[alpha] / (alpha^3 + alpha^2 - 2*alpha - 1)
//   L = K[theta] / (f),  f = x^3 + (alpha-2)*x^2 - (alpha+1)*x + 1
//
// Elements live in the power bases {1, alpha, alpha^2} and {1, theta,
// theta^2} with eager reduction after every product, so representations are
// unique and equality is plain coefficient comparison.  sigma generates
// Gal(K/Q) and phi generates Gal(L/K); both have order 3.

class KElem {
 public:
  KElem() : c_{Rational(0), Rational(0), Rational(0)} {}
  KElem(Rational a0, Rational a1, Rational a2)
      : c_{std::move(a0), std::move(a1), std::move(a2)} {}

  static KElem zero() { return KElem(); }
  static KElem one() { return from_int(1); }
  static KElem alpha() { return KElem(Rational(0), Rational(1), Rational(0)); }
  static KElem from_int(long n) {
    return KElem(Rational(n), Rational(0), Rational(0));
  }
  static KElem from_rational(Rational q) {
    return KElem(std::move(q), Rational(0), Rational(0));
  }

  const Rational& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }

  bool is_zero() const;
  bool is_rational() const;  // zero alpha and alpha^2 coordinates
  Rational rational_part() const;  // requires is_rational()

  // Multiplicative inverse via the 3x3 regular-representation solve.
  // Throws DivisionByZero on zero.
  KElem inverse() const;

  std::string str() const;

  friend KElem operator+(const KElem& a, const KElem& b);
  friend KElem operator-(const KElem& a, const KElem& b);
  friend KElem operator-(const KElem& a);
  friend KElem operator*(const KElem& a, const KElem& b);
  friend bool operator==(const KElem& a, const KElem& b) { return a.c_ == b.c_; }
  friend bool operator!=(const KElem& a, const KElem& b) { return !(a == b); }

 private:
  std::array<Rational, 3> c_;  // c_[i] multiplies alpha^i
};

inline bool is_zero(const KElem& a) { return a.is_zero(); }
inline KElem field_inverse(const KElem& a) { return a.inverse(); }

// sigma^power with sigma: alpha -> -alpha^2 - alpha + 1.  Powers reduce mod 3
// via precomposed images of alpha.
KElem sigma(const KElem& a, int power = 1);

// a * sigma(a) * sigma^2(a); the result must land in Q (throws Inconsistency
// otherwise).
Rational norm_k_to_q(const KElem& a);

// pi = alpha^2 - alpha - 2, the degree-one element above 7.
const KElem& k_pi();

KElem random_k(SplitMix64& rng);

class LElem {
 public:
  LElem() = default;
  LElem(KElem l0, KElem l1, KElem l2)
      : c_{std::move(l0), std::move(l1), std::move(l2)} {}

  static LElem zero() { return LElem(); }
  static LElem one() { return from_k(KElem::one()); }
  static LElem theta() {
    return LElem(KElem::zero(), KElem::one(), KElem::zero());
  }
  static LElem from_k(KElem k) {
    return LElem(std::move(k), KElem::zero(), KElem::zero());
  }
  static LElem from_int(long n) { return from_k(KElem::from_int(n)); }

  const KElem& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }

  bool is_zero() const;
  bool is_in_k() const;  // zero theta and theta^2 coordinates
  KElem k_part() const;  // requires is_in_k()

  // Inverse via the 3x3 solve over K.  Throws DivisionByZero on zero.
  LElem inverse() const;

  std::string str() const;

  friend LElem operator+(const LElem& a, const LElem& b);
  friend LElem operator-(const LElem& a, const LElem& b);
  friend LElem operator-(const LElem& a);
  friend LElem operator*(const LElem& a, const LElem& b);
  friend bool operator==(const LElem& a, const LElem& b) { return a.c_ == b.c_; }
  friend bool operator!=(const LElem& a, const LElem& b) { return !(a == b); }

 private:
  std::array<KElem, 3> c_;  // c_[i] multiplies theta^i
};

inline bool is_zero(const LElem& a) { return a.is_zero(); }
inline LElem field_inverse(const LElem& a) { return a.inverse(); }

inline LElem operator*(const KElem& k, const LElem& a) {
  return LElem::from_k(k) * a;
}

// phi^power with phi: theta -> -theta^2 + (-alpha+1)*theta + 2, fixing K.
LElem phi(const LElem& a, int power = 1);

// a * phi(a) * phi^2(a); must land in K (throws Inconsistency otherwise).
KElem norm_l_to_k(const LElem& a);

// lambda = (alpha^2+alpha) + (-alpha+1)*theta - theta^2, the twisting unit
// with norm_l_to_k(lambda) = sigma(pi)/pi.
const LElem& l_lambda();

LElem random_l(SplitMix64& rng);

// Cubic c3*x^3 + c2*x^2 + c1*x + c0 over an arbitrary coefficient ring.
// Evaluation uses left coefficients (coefficient times power), which is the
// convention that stays meaningful over noncommutative rings.
template <typename R>
struct CubicPoly {
  R c3, c2, c1, c0;

  R eval(const R& x) const {
    const R x2 = x * x;
    return c3 * (x2 * x) + c2 * x2 + c1 * x + c0;
  }
};

// x^3 + x^2 - 2x - 1, the defining polynomial of K.
CubicPoly<Rational> minpoly_alpha();

// f as a cubic over K: x^3 + (alpha-2)x^2 - (alpha+1)x + 1.
CubicPoly<KElem> f_poly();

}  // namespace skv
