#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "field_tower.hpp"

namespace skv {

// Finite fields F_q with q = p^k, k <= 3, presented as F_p[y]/(m(y)) for a
// monic modulus m.  Small and copyable by design: an element carries its
// field description, so there are no lifetime knots.  Only two extensions
// ever matter here — F_7 itself and F_8 = F_2[y]/(y^3+y^2+1) — but the code
// is generic over small p and k.
class FiniteField {
 public:
  // Prime field F_p.
  explicit FiniteField(int p);
  // Extension field with monic modulus of degree 2 or 3 given by its
  // coefficient list (constant first, leading 1 last).  The modulus must be
  // irreducible; for degree <= 3 that is exactly rootlessness, which is
  // verified exhaustively.  Throws Precondition on a reducible modulus.
  FiniteField(int p, const std::vector<int>& modulus);

  int p() const { return p_; }
  int degree() const { return degree_; }
  long size() const { return size_; }  // p^degree
  int modulus_coeff(int i) const { return modulus_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.p_ == b.p_ && a.degree_ == b.degree_ && a.modulus_ == b.modulus_;
  }
  friend bool operator!=(const FiniteField& a, const FiniteField& b) {
    return !(a == b);
  }

 private:
  int p_;
  int degree_;
  long size_;
  std::array<int, 4> modulus_;  // modulus_[i] multiplies y^i, degree_ entries + leading 1
};

class FqElem {
 public:
  FqElem() : field_(2), c_{0, 0, 0} {}  // zero of F_2; reassigned before use
  FqElem(FiniteField field, long constant);
  FqElem(FiniteField field, std::array<int, 3> coeffs);

  static FqElem zero(const FiniteField& field) { return FqElem(field, 0); }
  static FqElem one(const FiniteField& field) { return FqElem(field, 1); }
  // The class of y (only meaningful for extension fields).
  static FqElem gen(const FiniteField& field);
  // Enumeration: index in [0, q) read as base-p digits, low digit first.
  static FqElem from_index(const FiniteField& field, long index);

  const FiniteField& field() const { return field_; }
  int coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  bool is_zero() const { return c_ == std::array<int, 3>{0, 0, 0}; }

  FqElem pow(long e) const;
  // Multiplicative inverse by exhaustive search (q <= 343 always here).
  FqElem inverse() const;
  // Order in the multiplicative group; element must be nonzero.
  int mult_order() const;

  std::string str() const;

  friend FqElem operator+(const FqElem& a, const FqElem& b);
  friend FqElem operator-(const FqElem& a, const FqElem& b);
  friend FqElem operator-(const FqElem& a);
  friend FqElem operator*(const FqElem& a, const FqElem& b);
  friend bool operator==(const FqElem& a, const FqElem& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }
  friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }

 private:
  FiniteField field_;
  std::array<int, 3> c_;  // c_[i] multiplies y^i, reduced mod p and modulus
};

inline bool is_zero(const FqElem& a) { return a.is_zero(); }
inline FqElem field_inverse(const FqElem& a) { return a.inverse(); }

// x^3 + x^2 - 2x - 1 with coefficients reduced mod p.
CubicPoly<FqElem> reduce_minpoly_mod(int p);

// True iff the cubic has no root in its coefficient field (for a cubic over
// a field, rootlessness is exactly irreducibility).  Exhaustive over all q
// candidates.  Requires a nonzero leading coefficient.
bool cubic_is_irreducible(const CubicPoly<FqElem>& q);

// The unique r in F_7 with x^3+x^2-2x-1 = (x-r)^3 mod 7; scans all seven
// candidates and throws NoWitness unless exactly one works.
FqElem total_ramification_witness_7();

enum class ResiduePrime { Two, Pi };

// The residue field at the chosen prime: F_8 = F_2[y]/(y^3+y^2+1) at (2),
// F_7 at (pi).
FiniteField residue_field(ResiduePrime which);

// Reduction of a K element along the residue map: coefficient-wise mod 2
// with alpha -> y at (2); alpha -> 2 mod 7 at (pi).  Denominators must be
// coprime to the residue characteristic (Precondition otherwise).
FqElem reduce_k_at(ResiduePrime which, const KElem& a);

// f with coefficients pushed through the residue map.
CubicPoly<FqElem> reduce_f_at_residue(ResiduePrime which);

// True iff F_q contains a primitive n-th root of unity, i.e. n | q - 1.
// Precondition: n >= 2 and gcd(n, q) = 1.
bool mu_in_fq(long n, long q);

// Smallest-index element of exact multiplicative order n (requires n | q-1).
FqElem primitive_root_of_unity(const FiniteField& field, int n);

// Truncated series over F_q in a uniformizer s: coefficients on the window
// [start, cutoff), known-zero below start, unknown at cutoff and beyond.
// Used for the equal-characteristic model E = F_q((s)) with the automorphism
// s -> zeta*s.
class ResidueSeries {
 public:
  ResidueSeries(FiniteField field, std::int64_t start, std::int64_t cutoff);

  const FiniteField& field() const { return field_; }
  std::int64_t window_start() const { return start_; }
  std::int64_t cutoff() const { return cutoff_; }

  void set_coeff(std::int64_t exponent, const FqElem& value);
  // Zero below the window, stored value inside, InsufficientPrecision at or
  // beyond the cutoff.
  FqElem coeff_at(std::int64_t exponent) const;

  bool is_zero_on_window() const { return coeffs_.empty(); }
  // Exponent of the first nonzero coefficient; the zero series has none
  // (throws Precondition — callers test is_zero_on_window first).
  std::int64_t valuation() const;

  // The coefficient-wise substitution s -> zeta*s, i.e. a_i -> zeta^i a_i.
  ResidueSeries apply_zeta(const FqElem& zeta) const;

  ResidueSeries inverse() const;  // throws DivisionByZero on the zero series

  friend ResidueSeries operator*(const ResidueSeries& a, const ResidueSeries& b);

 private:
  FiniteField field_;
  std::int64_t start_;
  std::int64_t cutoff_;
  std::map<std::int64_t, FqElem> coeffs_;  // nonzero entries only
};

inline constexpr int kResidueSeriesPrecision = 16;

// Residue of Delta_sigma(a) = sigma(a)/a for sigma: s -> zeta*s with the
// canonical primitive n-th root zeta; a must be a uniformizer (valuation
// exactly 1).  The result is the constant term of the unit sigma(a)/a.
FqElem tame_delta_residue(const FiniteField& field, int n, const ResidueSeries& a);

// Valuation-1 series with random unit part on [1, 1+precision).
ResidueSeries random_uniformizer(const FiniteField& field, SplitMix64& rng,
                                 int precision = kResidueSeriesPrecision);

}  // namespace skv
