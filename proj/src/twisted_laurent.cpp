#include "twisted_laurent.hpp"

namespace skv {

namespace {

// Saturating window arithmetic: an exact operand does not constrain the
// product window.
std::int64_t shifted_cutoff(std::int64_t start, std::int64_t cutoff) {
  return cutoff == kExactCutoff ? kExactCutoff : start + cutoff;
}

// Memoized sigma_tilde^i(base) for the integer powers a multiplication
// needs; fills from the closest already-known power toward the target.
class TwistCache {
 public:
  TwistCache(const TwistContext& ctx, DElem base) : ctx_(ctx) {
    memo_.emplace(0, std::move(base));
  }

  const DElem& get(std::int64_t power) {
    auto it = memo_.find(power);
    if (it != memo_.end()) return it->second;
    if (power > 0) {
      const DElem& prev = get(power - 1);
      it = memo_.emplace(power, ctx_.aut.apply(prev)).first;
    } else {
      const DElem& next = get(power + 1);
      it = memo_.emplace(power, aut_inverse_apply(ctx_.aut, ctx_.witness, next)).first;
    }
    return it->second;
  }

 private:
  const TwistContext& ctx_;
  std::map<std::int64_t, DElem> memo_;
};

}  // namespace

const TwistContext& TwistContext::builtin() {
  static const TwistContext ctx{builtin_aut(), builtin_witness()};
  return ctx;
}

DElem twist_power(const TwistContext& ctx, const DElem& a, std::int64_t power) {
  DElem cur = a;
  for (std::int64_t step = 0; step < power; ++step) cur = ctx.aut.apply(cur);
  for (std::int64_t step = 0; step > power; --step) {
    cur = aut_inverse_apply(ctx.aut, ctx.witness, cur);
  }
  return cur;
}

TSeries::TSeries(std::int64_t start, std::int64_t cutoff)
    : start_(start), cutoff_(cutoff) {
  if (cutoff_ <= start_) {
    fail(ErrorKind::Precondition, "empty series window");
  }
}

TSeries TSeries::monomial(DElem c, std::int64_t e) {
  TSeries s(e, kExactCutoff);
  s.set_coeff(e, std::move(c));
  return s;
}

void TSeries::set_coeff(std::int64_t exponent, DElem value) {
  if (exponent < start_ || (cutoff_ != kExactCutoff && exponent >= cutoff_)) {
    fail(ErrorKind::Precondition, "coefficient outside window");
  }
  if (value.is_zero()) {
    coeffs_.erase(exponent);
  } else {
    coeffs_.insert_or_assign(exponent, std::move(value));
  }
}

DElem TSeries::coeff_at(std::int64_t exponent) const {
  if (cutoff_ != kExactCutoff && exponent >= cutoff_) {
    fail(ErrorKind::InsufficientPrecision,
         "coefficient " + std::to_string(exponent) + " beyond cutoff " +
             std::to_string(cutoff_));
  }
  const auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? DElem::zero() : it->second;
}

std::string TSeries::str() const {
  std::string out;
  for (const auto& [e, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")*x^" + std::to_string(e);
  }
  if (out.empty()) out = "0";
  if (cutoff_ != kExactCutoff) {
    out += " + O(x^" + std::to_string(cutoff_) + ")";
  }
  return out;
}

TSeries ts_add(const TSeries& a, const TSeries& b) {
  const std::int64_t start = std::min(a.window_start(), b.window_start());
  const std::int64_t cutoff = std::min(a.cutoff(), b.cutoff());
  TSeries out(start, cutoff);
  for (const auto& [e, c] : a.coeffs()) {
    if (cutoff != kExactCutoff && e >= cutoff) continue;
    out.set_coeff(e, c);
  }
  for (const auto& [e, c] : b.coeffs()) {
    if (cutoff != kExactCutoff && e >= cutoff) continue;
    out.set_coeff(e, out.coeff_at(e) + c);
  }
  return out;
}

TSeries ts_sub(const TSeries& a, const TSeries& b) {
  const std::int64_t start = std::min(a.window_start(), b.window_start());
  const std::int64_t cutoff = std::min(a.cutoff(), b.cutoff());
  TSeries out(start, cutoff);
  for (const auto& [e, c] : a.coeffs()) {
    if (cutoff != kExactCutoff && e >= cutoff) continue;
    out.set_coeff(e, c);
  }
  for (const auto& [e, c] : b.coeffs()) {
    if (cutoff != kExactCutoff && e >= cutoff) continue;
    out.set_coeff(e, out.coeff_at(e) - c);
  }
  return out;
}

TSeries ts_mul(const TwistContext& ctx, const TSeries& a, const TSeries& b) {
  const std::int64_t start = a.window_start() + b.window_start();
  const std::int64_t cutoff =
      std::min(shifted_cutoff(a.window_start(), b.cutoff()),
               shifted_cutoff(b.window_start(), a.cutoff()));
  TSeries out(start, cutoff);
  for (const auto& [j, bj] : b.coeffs()) {
    TwistCache twists(ctx, bj);
    for (const auto& [i, ai] : a.coeffs()) {
      if (cutoff != kExactCutoff && i + j >= cutoff) continue;
      out.set_coeff(i + j, out.coeff_at(i + j) + ai * twists.get(i));
    }
  }
  return out;
}

XadicValue ts_valuation(const TSeries& a) {
  if (a.vanishes_on_window()) return XadicValue::infinity();
  return XadicValue::at(a.coeffs().begin()->first);
}

TSeries ts_inv(const TwistContext& ctx, const TSeries& a, int precision_if_exact) {
  if (a.vanishes_on_window()) {
    fail(ErrorKind::DivisionByZero, "inverse of a series with no visible coefficient");
  }
  const std::int64_t v = a.coeffs().begin()->first;
  const DElem& lead = a.coeffs().begin()->second;
  const DElem lead_inv = lead.inverse();

  // Exact monomials invert exactly: (c x^v)^-1 = sigma_tilde^-v(c^-1) x^-v.
  if (a.exact() && a.coeffs().size() == 1) {
    return TSeries::monomial(twist_power(ctx, lead_inv, -v), -v);
  }

  const std::int64_t width =
      a.exact() ? precision_if_exact : a.cutoff() - v;
  if (width < 1) {
    fail(ErrorKind::InsufficientPrecision, "no room to invert: width < 1");
  }

  // Solve sum_{t>=0} a_{v+t} sigma_tilde^{v+t}(s_{-v+m-t}) = [m = 0] for the
  // coefficients s of the inverse, one exponent at a time.
  TSeries out(-v, -v + width);
  out.set_coeff(-v, twist_power(ctx, lead_inv, -v));
  std::vector<TwistCache> s_twists;
  s_twists.emplace_back(ctx, out.coeff_at(-v));
  for (std::int64_t m = 1; m < width; ++m) {
    DElem acc = DElem::zero();
    for (std::int64_t t = 1; t <= m; ++t) {
      const DElem at = a.coeff_at(v + t);
      if (at.is_zero()) continue;
      acc = acc + at * s_twists[static_cast<std::size_t>(m - t)].get(v + t);
    }
    DElem coeff = twist_power(ctx, -(lead_inv * acc), -v);
    out.set_coeff(-v + m, coeff);
    s_twists.emplace_back(ctx, std::move(coeff));
  }
  return out;
}

bool is_one_on_window(const TSeries& a) {
  if (a.window_start() > 0 || a.cutoff() <= 0) return false;
  return a.coeffs().size() == 1 && a.coeffs().begin()->first == 0 &&
         a.coeffs().begin()->second == DElem::one();
}

TSeries make_t(const InnerWitness& w) {
  return TSeries::monomial(w.inverse(), 3);
}

std::vector<NamedFlag> check_t_central(const TwistContext& ctx, SplitMix64& rng,
                                       int trials) {
  std::vector<NamedFlag> out;
  const TSeries t = make_t(ctx.witness);
  const TSeries theta0 = TSeries::monomial(DElem::theta(), 0);
  const TSeries u0 = TSeries::monomial(DElem::u(), 0);
  const TSeries x1 = TSeries::monomial(DElem::one(), 1);

  out.push_back({"c1_theta", ts_mul(ctx, t, theta0) == ts_mul(ctx, theta0, t)});
  out.push_back({"c2_u", ts_mul(ctx, t, u0) == ts_mul(ctx, u0, t)});
  out.push_back({"c3_x", ts_mul(ctx, t, x1) == ts_mul(ctx, x1, t)});
  bool random_ok = true;
  for (int i = 0; i < trials && random_ok; ++i) {
    const TSeries c0 = TSeries::monomial(random_d(rng), 0);
    random_ok = ts_mul(ctx, t, c0) == ts_mul(ctx, c0, t);
  }
  out.push_back({"c4_random", random_ok});
  return out;
}

TSeries random_series(SplitMix64& rng, int precision) {
  const std::int64_t k = static_cast<std::int64_t>(rng.below(7)) - 3;
  TSeries out(k, k + precision);
  const int support = 2 + static_cast<int>(rng.below(3));  // 2..4 terms
  for (int n = 0; n < support; ++n) {
    const std::int64_t e = k + static_cast<std::int64_t>(rng.below(
                                   static_cast<std::uint64_t>(precision)));
    out.set_coeff(e, random_d(rng));
  }
  return out;
}

}  // namespace skv
