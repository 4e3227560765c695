#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "algebra_d.hpp"

namespace skv {

// Truncated twisted Laurent series over D with the rule x*a = sigma_tilde(a)*x,
// so the coefficient of x^{i+j} in a product accumulates a_i * sigma_tilde^i(b_j).
//
// Every series carries an explicit window [start, cutoff): coefficients are
// known (and stored sparsely) inside it, known-zero below it, and unknown at
// the cutoff and beyond.  cutoff == kExactCutoff means the series is exact —
// a Laurent polynomial whose coefficients are all known.  Binary operations
// propagate the weakest window; asking for a coefficient beyond a cutoff is
// an InsufficientPrecision error, never a silent zero.

inline constexpr std::int64_t kExactCutoff = INT64_MAX;

// sigma_tilde and its inner-witness inverse data, bundled so series
// multiplication can twist by arbitrary integer powers.  Immutable after
// construction; the basis-image tables inside OuterAut are precomputed once
// and only read afterwards, so a context can be shared across threads.
struct TwistContext {
  OuterAut aut;
  InnerWitness witness;

  static const TwistContext& builtin();
};

// sigma_tilde^power for any integer power: iterated forward applications for
// power >= 0, iterated aut_inverse_apply for power < 0.
DElem twist_power(const TwistContext& ctx, const DElem& a, std::int64_t power);

struct XadicValue {
  bool infinite;
  std::int64_t exponent;  // meaningful only when !infinite

  static XadicValue infinity() { return {true, 0}; }
  static XadicValue at(std::int64_t e) { return {false, e}; }

  friend bool operator==(const XadicValue& a, const XadicValue& b) {
    return a.infinite == b.infinite && (a.infinite || a.exponent == b.exponent);
  }
  friend bool operator!=(const XadicValue& a, const XadicValue& b) {
    return !(a == b);
  }
};

class TSeries {
 public:
  // Zero series on the given window.
  TSeries(std::int64_t start, std::int64_t cutoff);

  static TSeries zero(std::int64_t start = 0, std::int64_t cutoff = kExactCutoff) {
    return TSeries(start, cutoff);
  }
  // Exact single-term series c*x^e (canonical zero when c = 0).
  static TSeries monomial(DElem c, std::int64_t e);
  static TSeries one() { return monomial(DElem::one(), 0); }

  std::int64_t window_start() const { return start_; }
  std::int64_t cutoff() const { return cutoff_; }
  bool exact() const { return cutoff_ == kExactCutoff; }

  void set_coeff(std::int64_t exponent, DElem value);
  // Known-zero below the window, stored value inside, InsufficientPrecision
  // at or beyond the cutoff.
  DElem coeff_at(std::int64_t exponent) const;

  bool vanishes_on_window() const { return coeffs_.empty(); }
  const std::map<std::int64_t, DElem>& coeffs() const { return coeffs_; }

  std::string str() const;

  // Equal coefficient data and equal cutoff.  The window start is not
  // compared: below-window coefficients are zero either way.
  friend bool operator==(const TSeries& a, const TSeries& b) {
    return a.cutoff_ == b.cutoff_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const TSeries& a, const TSeries& b) { return !(a == b); }

 private:
  std::int64_t start_;
  std::int64_t cutoff_;
  std::map<std::int64_t, DElem> coeffs_;  // nonzero entries only
};

TSeries ts_add(const TSeries& a, const TSeries& b);
TSeries ts_sub(const TSeries& a, const TSeries& b);
TSeries ts_mul(const TwistContext& ctx, const TSeries& a, const TSeries& b);

// Exponent of the first nonzero coefficient within the window; infinity for
// a series that vanishes on its window (in particular for the zero series).
XadicValue ts_valuation(const TSeries& a);

// Inverse with a*result = 1 on the result window, by exact leading-term
// inversion plus the twisted convolution recurrence.  For an exact input the
// window width is precision_if_exact coefficients, except that an exact
// monomial inverts exactly.  Throws DivisionByZero on a series with no
// nonzero coefficient.
TSeries ts_inv(const TwistContext& ctx, const TSeries& a, int precision_if_exact = 12);

// True iff the series is exactly 1 on its window (coefficient 1 at exponent
// 0, nothing else) and the window actually shows exponent 0.
bool is_one_on_window(const TSeries& a);

// t = d^-1 * x^3, the central uniformizing element of the x^3 level.
TSeries make_t(const InnerWitness& w);

// Exact centrality of t, one coefficient identity per flag:
//   c1_theta    t*(theta x^0) = (theta x^0)*t
//   c2_u        t*(u x^0)     = (u x^0)*t
//   c3_x        t*x           = x*t
//   c4_random   t*(c x^0)     = (c x^0)*t for `trials` random c in D
std::vector<NamedFlag> check_t_central(const TwistContext& ctx, SplitMix64& rng,
                                       int trials = 20);

// Random series: window [k, k+precision) with k in [-3, 3] and a small
// random support of random D coefficients.
TSeries random_series(SplitMix64& rng, int precision = 12);

}  // namespace skv
