#include "checks.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <sstream>

#include <json.hpp>

#include "residue.hpp"
#include "twisted_laurent.hpp"

namespace skv {

namespace {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::SingularElement: return "singular-element";
    case ErrorKind::Inconsistency: return "internal-inconsistency";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Shape: return "shape";
    case ErrorKind::NonRational: return "non-rational";
    case ErrorKind::InsufficientPrecision: return "insufficient-precision";
    case ErrorKind::UnknownCheck: return "unknown-check";
    case ErrorKind::NoWitness: return "no-witness";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

struct Instance {
  TwistContext ctx;

  const OuterAut& aut() const { return ctx.aut; }
  const InnerWitness& witness() const { return ctx.witness; }
};

Instance make_instance(const CheckContext& c) {
  MaterializedConstants mc = materialize(c.constants);
  OuterAut aut = OuterAut::unchecked(std::move(mc.theta_image), std::move(mc.u_image));
  InnerWitness w = InnerWitness::unchecked(std::move(mc.inner_d));
  return Instance{TwistContext{std::move(aut), std::move(w)}};
}

using Body = std::pair<bool, std::string>;

Body relation_flag(const CheckContext& c, const std::string& flag) {
  const Instance inst = make_instance(c);
  for (const NamedFlag& f : check_relations(inst.aut(), inst.witness())) {
    if (f.name == flag) {
      return {f.holds, f.holds ? "exact identity verified"
                               : "identity violated by the active constants"};
    }
  }
  fail(ErrorKind::UnknownCheck, "relation flag '" + flag + "' missing");
}

std::string trial_msg(const char* what, int trial) {
  return std::string(what) + " (trial " + std::to_string(trial) + ")";
}

// --- relation and norm checks ---------------------------------------------

Body chk_norm_pi(const CheckContext&) {
  if (norm_k_to_q(k_pi()) != Rational(7)) {
    return {false, "norm of pi is not 7"};
  }
  if (norm_k_to_q(sigma(k_pi()) * k_pi().inverse()) != Rational(1)) {
    return {false, "sigma(pi)/pi is not norm-one"};
  }
  return {true, "N(pi) = 7 exactly; N(sigma(pi)/pi) = 1"};
}

Body chk_u_cubed_chain(const CheckContext& c) {
  const Instance inst = make_instance(c);
  const DElem& uu = inst.aut().u_image();
  const KElem n_lambda = norm_l_to_k(inst.aut().lambda());
  const bool chain = uu * uu * uu == DElem::from_k(n_lambda * two_pi());
  const bool r1 = uu * uu * uu == DElem::from_k(sigma(two_pi()));
  const bool r7 = n_lambda == sigma(k_pi()) * k_pi().inverse();
  if (!chain) return {false, "sigma_tilde(u)^3 != N(lambda)*2*pi"};
  if (r1 != r7) {
    return {false, "chain inconsistency: the norm identity and the cube identity disagree"};
  }
  return {true, "cube of sigma_tilde(u) factors through N(lambda) as expected"};
}

Body chk_defining_polynomials(const CheckContext&) {
  const CubicPoly<KElem> mp{KElem::one(), KElem::one(), KElem::from_int(-2),
                            KElem::from_int(-1)};
  if (!mp.eval(KElem::alpha()).is_zero()) return {false, "minpoly(alpha) != 0"};
  const CubicPoly<KElem> f = f_poly();
  const auto eval_l = [&f](const LElem& x) {
    const LElem x2 = x * x;
    return LElem::from_k(f.c3) * (x2 * x) + LElem::from_k(f.c2) * x2 +
           LElem::from_k(f.c1) * x + LElem::from_k(f.c0);
  };
  if (!eval_l(LElem::theta()).is_zero()) return {false, "f(theta) != 0"};
  if (!eval_l(phi(LElem::theta())).is_zero()) return {false, "f(phi(theta)) != 0"};
  if (eval_poly_in_d(f, 0, DElem::theta()) != DElem::zero()) {
    return {false, "f(theta) != 0 inside D"};
  }
  if (eval_poly_in_d(mp, 0, DElem::from_k(KElem::alpha())) != DElem::zero()) {
    return {false, "minpoly(alpha) != 0 inside D"};
  }
  return {true, "defining polynomials vanish at their roots, in L and in D"};
}

// --- field property checks -------------------------------------------------

Body chk_field_axioms(const CheckContext& c) {
  SplitMix64 rng = rng_for(c.seed, "field_axioms");
  for (int i = 0; i < c.trials; ++i) {
    const KElem a = random_k(rng), b = random_k(rng), cc = random_k(rng);
    if ((a * b) * cc != a * (b * cc)) return {false, trial_msg("K associativity", i)};
    if (a * b != b * a) return {false, trial_msg("K commutativity", i)};
    if (a * (b + cc) != a * b + a * cc) return {false, trial_msg("K distributivity", i)};
    if (!a.is_zero() && a * a.inverse() != KElem::one()) {
      return {false, trial_msg("K inverse", i)};
    }
    const LElem x = random_l(rng), y = random_l(rng), z = random_l(rng);
    if ((x * y) * z != x * (y * z)) return {false, trial_msg("L associativity", i)};
    if (x * y != y * x) return {false, trial_msg("L commutativity", i)};
    if (x * (y + z) != x * y + x * z) return {false, trial_msg("L distributivity", i)};
    if (!x.is_zero() && x * x.inverse() != LElem::one()) {
      return {false, trial_msg("L inverse", i)};
    }
  }
  return {true, std::to_string(c.trials) + " random triples in K and L"};
}

Body chk_automorphism_orders(const CheckContext& c) {
  if (sigma(KElem::alpha()) == KElem::alpha() ||
      sigma(KElem::alpha(), 2) == KElem::alpha()) {
    return {false, "sigma does not have order 3 on alpha"};
  }
  if (phi(LElem::theta()) == LElem::theta() ||
      phi(LElem::theta(), 2) == LElem::theta()) {
    return {false, "phi does not have order 3 on theta"};
  }
  SplitMix64 rng = rng_for(c.seed, "automorphism_orders");
  for (int i = 0; i < c.trials; ++i) {
    const KElem a = random_k(rng), b = random_k(rng);
    if (sigma(a, 3) != a) return {false, trial_msg("sigma^3 != id", i)};
    if (sigma(a * b) != sigma(a) * sigma(b)) return {false, trial_msg("sigma of product", i)};
    if (sigma(a + b) != sigma(a) + sigma(b)) return {false, trial_msg("sigma of sum", i)};
    const LElem x = random_l(rng), y = random_l(rng);
    if (phi(x, 3) != x) return {false, trial_msg("phi^3 != id", i)};
    if (phi(x * y) != phi(x) * phi(y)) return {false, trial_msg("phi of product", i)};
    if (phi(x + y) != phi(x) + phi(y)) return {false, trial_msg("phi of sum", i)};
    if (phi(LElem::from_k(a)) != LElem::from_k(a)) {
      return {false, trial_msg("phi moves K", i)};
    }
  }
  return {true, std::to_string(c.trials) + " random samples; both maps have exact order 3"};
}

Body chk_norm_multiplicativity(const CheckContext& c) {
  SplitMix64 rng = rng_for(c.seed, "norm_multiplicativity");
  for (int i = 0; i < c.trials; ++i) {
    const KElem a = random_k(rng), b = random_k(rng);
    if (norm_k_to_q(a * b) != norm_k_to_q(a) * norm_k_to_q(b)) {
      return {false, trial_msg("K norm", i)};
    }
    const LElem x = random_l(rng), y = random_l(rng);
    if (norm_l_to_k(x * y) != norm_l_to_k(x) * norm_l_to_k(y)) {
      return {false, trial_msg("L norm", i)};
    }
  }
  return {true, std::to_string(c.trials) + " random pairs in K and L"};
}

// --- D property checks -----------------------------------------------------

Body chk_d_algebra_axioms(const CheckContext& c) {
  const DElem ut = DElem::u() * DElem::theta();
  if (ut != DElem::from_l(phi(LElem::theta())) * DElem::u()) {
    return {false, "u*theta != phi(theta)*u"};
  }
  if (ut == DElem::theta() * DElem::u()) {
    return {false, "u and theta commute"};
  }
  const DElem u3 = DElem::u() * DElem::u() * DElem::u();
  if (u3 != DElem::from_k(two_pi())) return {false, "u^3 != 2*pi"};
  SplitMix64 rng = rng_for(c.seed, "d_algebra_axioms");
  for (int i = 0; i < c.trials; ++i) {
    const DElem a = random_d(rng), b = random_d(rng), cc = random_d(rng);
    if ((a * b) * cc != a * (b * cc)) return {false, trial_msg("associativity", i)};
    if (a * (b + cc) != a * b + a * cc) return {false, trial_msg("left distributivity", i)};
    if ((a + b) * cc != a * cc + b * cc) return {false, trial_msg("right distributivity", i)};
  }
  return {true, std::to_string(c.trials) + " random triples; u*theta = phi(theta)*u"};
}

Body chk_division_evidence(const CheckContext& c) {
  SplitMix64 rng = rng_for(c.seed, "division_evidence");
  int done = 0;
  while (done < c.trials) {
    DElem a = random_d(rng);
    if (a.is_zero()) continue;
    try {
      const DElem inv = a.inverse();  // asserts two-sidedness internally
      if ((a * inv) != DElem::one()) return {false, "inverse did not round-trip"};
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::SingularElement) {
        return {false, std::string("zero divisor witness: ") + a.str()};
      }
      throw;
    }
    ++done;
  }
  return {true, std::to_string(c.trials) + " random nonzero elements inverted"};
}

Body chk_homomorphism(const CheckContext& c) {
  const Instance inst = make_instance(c);
  SplitMix64 rng = rng_for(c.seed, "homomorphism_sigma_tilde");
  if (inst.aut().apply(DElem::from_k(KElem::alpha())) !=
      DElem::from_k(sigma(KElem::alpha()))) {
    return {false, "restriction to K is not sigma"};
  }
  for (int i = 0; i < c.trials; ++i) {
    const DElem a = random_d(rng), b = random_d(rng);
    if (inst.aut().apply(a + b) != inst.aut().apply(a) + inst.aut().apply(b)) {
      return {false, trial_msg("additivity", i)};
    }
    if (inst.aut().apply(a * b) != inst.aut().apply(a) * inst.aut().apply(b)) {
      return {false, trial_msg("multiplicativity", i)};
    }
  }
  return {true, std::to_string(c.trials) + " random pairs"};
}

Body chk_inner_cube(const CheckContext& c) {
  const Instance inst = make_instance(c);
  SplitMix64 rng = rng_for(c.seed, "sigma_tilde_inner_cube");
  for (int i = 0; i < c.trials; ++i) {
    const DElem a = random_d(rng);
    if (inst.aut().apply(a, 3) !=
        inst.witness().value() * a * inst.witness().inverse()) {
      return {false, trial_msg("cube is not conjugation by d", i)};
    }
  }
  return {true, std::to_string(c.trials) + " random elements"};
}

Body chk_aut_inverse(const CheckContext& c) {
  const Instance inst = make_instance(c);
  SplitMix64 rng = rng_for(c.seed, "aut_inverse_roundtrip");
  for (int i = 0; i < c.trials; ++i) {
    const DElem a = random_d(rng);
    if (aut_inverse_apply(inst.aut(), inst.witness(), inst.aut().apply(a)) != a) {
      return {false, trial_msg("inverse after forward", i)};
    }
    if (inst.aut().apply(aut_inverse_apply(inst.aut(), inst.witness(), a)) != a) {
      return {false, trial_msg("forward after inverse", i)};
    }
  }
  return {true, std::to_string(c.trials) + " random elements"};
}

// --- residue checks ---------------------------------------------------------

Body chk_minpoly_mod2(const CheckContext&) {
  const CubicPoly<FqElem> p = reduce_minpoly_mod(2);
  const FiniteField f2(2);
  if (!(p.c3 == FqElem(f2, 1) && p.c2 == FqElem(f2, 1) && p.c1 == FqElem(f2, 0) &&
        p.c0 == FqElem(f2, 1))) {
    return {false, "reduction mod 2 is not x^3+x^2+1"};
  }
  if (!cubic_is_irreducible(p)) return {false, "root found over F_2"};
  return {true, "x^3+x^2+1 has no root among 2 candidates"};
}

Body chk_minpoly_mod7(const CheckContext&) {
  const FiniteField f7(7);
  const FqElem r = total_ramification_witness_7();
  if (r != FqElem(f7, 2)) return {false, "cube witness is not 2: " + r.str()};
  // The derivative 3x^2+2x-2 must also vanish at the triple root.
  const FqElem d = FqElem(f7, 3) * r * r + FqElem(f7, 2) * r - FqElem(f7, 2);
  if (!d.is_zero()) return {false, "derivative does not vanish at the witness"};
  return {true, "unique r = 2 among 7 candidates; (x-2)^3 matches and the derivative vanishes"};
}

Body chk_f_mod2(const CheckContext&) {
  const CubicPoly<FqElem> q = reduce_f_at_residue(ResiduePrime::Two);
  const FiniteField f8 = residue_field(ResiduePrime::Two);
  const FqElem y = FqElem::gen(f8);
  if (!(q.c3 == FqElem::one(f8) && q.c2 == y && q.c1 == y + FqElem::one(f8) &&
        q.c0 == FqElem::one(f8))) {
    return {false, "reduction at (2) has unexpected coefficients"};
  }
  if (!cubic_is_irreducible(q)) return {false, "root found over F_8"};
  return {true, "x^3 + y*x^2 + (y+1)*x + 1 has no root among 8 candidates"};
}

Body chk_f_modpi(const CheckContext&) {
  const CubicPoly<FqElem> q = reduce_f_at_residue(ResiduePrime::Pi);
  const FiniteField f7 = residue_field(ResiduePrime::Pi);
  if (!(q.c3 == FqElem(f7, 1) && q.c2 == FqElem(f7, 0) && q.c1 == FqElem(f7, 4) &&
        q.c0 == FqElem(f7, 1))) {
    return {false, "reduction at (pi) is not x^3 - 3x + 1"};
  }
  if (!cubic_is_irreducible(q)) return {false, "root found over F_7"};
  return {true, "x^3 - 3x + 1 has no root among 7 candidates"};
}

Body chk_cubic_crosscheck(const CheckContext& c) {
  const FiniteField f7(7);
  SplitMix64 rng = rng_for(c.seed, "cubic_irred_crosscheck");
  for (int i = 0; i < 20; ++i) {
    const CubicPoly<FqElem> q{FqElem(f7, 1 + static_cast<long>(rng.below(6))),
                              FqElem(f7, static_cast<long>(rng.below(7))),
                              FqElem(f7, static_cast<long>(rng.below(7))),
                              FqElem(f7, static_cast<long>(rng.below(7)))};
    // Independent reducibility test: synthetic division by every monic x - r.
    bool has_linear_factor = false;
    for (int r = 0; r < 7 && !has_linear_factor; ++r) {
      const FqElem rr(f7, r);
      const FqElem b2 = q.c3;
      const FqElem b1 = q.c2 + rr * b2;
      const FqElem b0 = q.c1 + rr * b1;
      const FqElem rem = q.c0 + rr * b0;
      has_linear_factor = rem.is_zero();
    }
    if (cubic_is_irreducible(q) != !has_linear_factor) {
      return {false, trial_msg("disagreement", i)};
    }
  }
  return {true, "20 random cubics over F_7 agree with synthetic division"};
}

// --- roots of unity ---------------------------------------------------------

Body chk_mu_3_7(const CheckContext&) {
  return {mu_in_fq(3, 7), "3 divides 7-1 = 6"};
}

Body chk_mu_9_7(const CheckContext&) {
  return {!mu_in_fq(9, 7), "9 does not divide 7-1 = 6"};
}

Body chk_mu_3_2(const CheckContext&) {
  return {!mu_in_fq(3, 2), "3 does not divide 2-1 = 1"};
}

// --- tame residue model -----------------------------------------------------

Body chk_tame_delta(const CheckContext& c) {
  const FiniteField f7(7);
  SplitMix64 rng = rng_for(c.seed, "tame_delta_residue");
  // Pinned samples: Delta of s itself, and of s*(1+s), both have residue zeta.
  {
    ResidueSeries s(f7, 1, 1 + kResidueSeriesPrecision);
    s.set_coeff(1, FqElem(f7, 1));
    if (tame_delta_residue(f7, 3, s) != FqElem(f7, 2)) {
      return {false, "Delta(s) residue is not 2 for n = 3"};
    }
    s.set_coeff(2, FqElem(f7, 1));
    if (tame_delta_residue(f7, 3, s) != FqElem(f7, 2)) {
      return {false, "Delta(s*(1+s)) residue is not 2 for n = 3"};
    }
  }
  const int runs = std::max(1, c.trials / 2);
  for (const int n : {2, 3, 6}) {
    const FqElem zeta = primitive_root_of_unity(f7, n);
    if (zeta.mult_order() != n) return {false, "zeta has wrong order"};
    for (int i = 0; i < runs; ++i) {
      const ResidueSeries a = random_uniformizer(f7, rng);
      const FqElem res = tame_delta_residue(f7, n, a);
      if (res != zeta) {
        return {false, "residue " + res.str() + " != zeta for n = " + std::to_string(n) +
                           " " + trial_msg("", i)};
      }
    }
  }
  return {true, std::to_string(runs) + " uniformizers per n in {2, 3, 6}; residue always zeta"};
}

Body chk_delta_cocycle(const CheckContext& c) {
  const FiniteField f7(7);
  const FqElem zeta = primitive_root_of_unity(f7, 3);
  SplitMix64 rng = rng_for(c.seed, "delta_cocycle");
  for (int i = 0; i < 20; ++i) {
    const ResidueSeries a = random_uniformizer(f7, rng);
    const ResidueSeries inv = a.inverse();
    const ResidueSeries q1 = a.apply_zeta(zeta) * inv;
    const ResidueSeries q2 = a.apply_zeta(zeta * zeta) * inv;
    const FqElem r1 = q1.coeff_at(0);
    const FqElem r_sigma = q1.apply_zeta(zeta).coeff_at(0);
    const FqElem r2 = q2.coeff_at(0);
    if (r2 != r_sigma * r1) return {false, trial_msg("cocycle identity", i)};
    if (r1 != zeta || r2 != zeta * zeta) {
      return {false, trial_msg("unexpected residues", i)};
    }
  }
  return {true, "20 random uniformizers, n = 3 over F_7"};
}

// --- twisted series checks --------------------------------------------------

Body chk_valuation_axioms(const CheckContext& c) {
  const Instance inst = make_instance(c);
  SplitMix64 rng = rng_for(c.seed, "valuation_axioms");
  // Membership samples: exponent >= 0 iff integral, >= 1 iff in the ideal.
  if (ts_valuation(TSeries::one()) != XadicValue::at(0)) {
    return {false, "v(1) != 0"};
  }
  if (ts_valuation(TSeries::monomial(DElem::one(), 1)) != XadicValue::at(1)) {
    return {false, "v(x) != 1"};
  }
  if (ts_valuation(TSeries::zero()).infinite == false) {
    return {false, "v(0) is finite"};
  }
  int done = 0;
  while (done < c.trials) {
    const TSeries a = random_series(rng, c.precision);
    const TSeries b = random_series(rng, c.precision);
    if (a.vanishes_on_window() || b.vanishes_on_window()) continue;
    const std::int64_t va = ts_valuation(a).exponent;
    const std::int64_t vb = ts_valuation(b).exponent;
    const TSeries prod = ts_mul(inst.ctx, a, b);
    const XadicValue vab = ts_valuation(prod);
    if (va + vb < prod.cutoff()) {
      if (vab != XadicValue::at(va + vb)) {
        return {false, trial_msg("v(a*b) != v(a) + v(b)", done)};
      }
    } else if (!prod.vanishes_on_window()) {
      // The true leading exponent va+vb lies beyond the product window, so
      // every coefficient the window can see must be zero.
      return {false, trial_msg("nonzero product coefficient below v(a) + v(b)", done)};
    }
    const TSeries s = ts_add(a, b);
    const std::int64_t lower = std::min(va, vb);
    const XadicValue vs = ts_valuation(s);
    if (!vs.infinite && vs.exponent < lower) {
      return {false, trial_msg("v(a+b) < min", done)};
    }
    if (va != vb && lower < s.cutoff()) {
      if (vs.infinite || vs.exponent != lower) {
        return {false, trial_msg("strict ultrametric equality", done)};
      }
    }
    ++done;
  }
  return {true, std::to_string(c.trials) + " random pairs at precision " +
                    std::to_string(c.precision)};
}

Body chk_ts_assoc(const CheckContext& c) {
  const Instance inst = make_instance(c);
  SplitMix64 rng = rng_for(c.seed, "ts_mul_associativity");
  const int runs = std::max(1, c.trials / 2);
  for (int i = 0; i < runs; ++i) {
    const TSeries a = random_series(rng, c.precision);
    const TSeries b = random_series(rng, c.precision);
    const TSeries cc = random_series(rng, c.precision);
    if (ts_mul(inst.ctx, ts_mul(inst.ctx, a, b), cc) !=
        ts_mul(inst.ctx, a, ts_mul(inst.ctx, b, cc))) {
      return {false, trial_msg("associativity", i)};
    }
  }
  return {true, std::to_string(runs) + " random triples"};
}

Body chk_ts_inv(const CheckContext& c) {
  const Instance inst = make_instance(c);
  SplitMix64 rng = rng_for(c.seed, "ts_inv_roundtrip");
  const int runs = std::max(1, c.trials / 2);
  for (int i = 0; i < runs; ++i) {
    TSeries a = random_series(rng, c.precision);
    // Pin the leading coefficient to the window start so the inverse and the
    // round-trip product keep a usable window.
    DElem lead = random_d(rng);
    while (lead.is_zero()) lead = random_d(rng);
    a.set_coeff(a.window_start(), std::move(lead));
    const TSeries s = ts_inv(inst.ctx, a, c.precision);
    if (!is_one_on_window(ts_mul(inst.ctx, a, s))) {
      return {false, trial_msg("a * inv(a) != 1", i)};
    }
    if (!is_one_on_window(ts_mul(inst.ctx, s, a))) {
      return {false, trial_msg("inv(a) * a != 1", i)};
    }
  }
  return {true, std::to_string(runs) + " random series inverted both ways"};
}

Body chk_t_central(const CheckContext& c) {
  const Instance inst = make_instance(c);
  SplitMix64 rng = rng_for(c.seed, "t_central");
  for (const NamedFlag& f : check_t_central(inst.ctx, rng)) {
    if (!f.holds) return {false, "commutation failed: " + f.name};
  }
  return {true, "t commutes with theta, u, x, and 20 random coefficients"};
}

Body chk_centre_evidence(const CheckContext& c) {
  const Instance inst = make_instance(c);
  SplitMix64 rng = rng_for(c.seed, "centre_evidence");
  const TSeries t = make_t(inst.witness());
  const TSeries t_inv = ts_inv(inst.ctx, t, c.precision);
  const TSeries t2 = ts_mul(inst.ctx, t, t);
  const int runs = std::max(1, c.trials / 10);
  for (int i = 0; i < runs; ++i) {
    // s = q_{-1} t^-1 + q_0 + q_1 t + q_2 t^2 with random rational q's.
    TSeries s = TSeries::monomial(DElem::from_k(KElem::from_rational(random_coord(rng))), 0);
    const TSeries powers[3] = {t_inv, t, t2};
    for (const TSeries& p : powers) {
      const TSeries scaled = ts_mul(
          inst.ctx,
          TSeries::monomial(DElem::from_k(KElem::from_rational(random_coord(rng))), 0), p);
      s = ts_add(s, scaled);
    }
    const TSeries b = random_series(rng, c.precision);
    if (ts_mul(inst.ctx, s, b) != ts_mul(inst.ctx, b, s)) {
      return {false, trial_msg("rational t-series does not commute", i)};
    }
  }
  return {true, std::to_string(runs) + " rational series in t against random series"};
}

std::vector<CheckDef> build_registry() {
  std::vector<CheckDef> defs;
  const auto add = [&defs](std::string name, std::string anchor,
                           std::function<Body(const CheckContext&)> fn) {
    defs.push_back(CheckDef{std::move(name), std::move(anchor), std::move(fn)});
  };
  const auto add_rel = [&add](std::string name, std::string anchor, std::string flag) {
    add(std::move(name), std::move(anchor),
        [flag = std::move(flag)](const CheckContext& c) { return relation_flag(c, flag); });
  };

  add("norm_pi_is_7", "N_{K/Q}(pi) = 7", chk_norm_pi);
  add_rel("rel_u_cubed", "sigma_tilde(u)^3 = sigma(2*pi)", "u_cubed");
  add_rel("rel_commutation",
          "sigma_tilde(u)*sigma_tilde(theta) = sigma_tilde(phi(theta))*sigma_tilde(u)",
          "commutation");
  add_rel("rel_f_sigma", "f^sigma(sigma_tilde(theta)) = 0", "f_sigma");
  add_rel("rel_inner_theta", "sigma_tilde^3(theta) = d*theta*d^-1", "inner_theta");
  add_rel("rel_inner_u", "sigma_tilde^3(u) = d*u*d^-1", "inner_u");
  add_rel("rel_d_fixed", "sigma_tilde(d) = d", "d_fixed");
  add_rel("rel_norm_lambda", "N_{L/K}(lambda) = sigma(pi)/pi", "norm_lambda");
  add("rel_u_cubed_chain", "sigma_tilde(u)^3 = N_{L/K}(lambda)*2*pi", chk_u_cubed_chain);
  add("defining_polynomials", "minpoly(alpha) = 0, f(theta) = 0, f(phi(theta)) = 0",
      chk_defining_polynomials);
  add("field_axioms", "plumbing: field axioms in K and L", chk_field_axioms);
  add("automorphism_orders", "sigma and phi are ring maps of exact order 3",
      chk_automorphism_orders);
  add("norm_multiplicativity", "N(a*b) = N(a)*N(b) in K and L", chk_norm_multiplicativity);
  add("d_algebra_axioms",
      "D is associative and distributive; u*theta = phi(theta)*u != theta*u",
      chk_d_algebra_axioms);
  add("division_evidence", "nonzero elements of D are invertible", chk_division_evidence);
  add("homomorphism_sigma_tilde",
      "sigma_tilde(a+b) = sigma_tilde(a)+sigma_tilde(b); "
      "sigma_tilde(a*b) = sigma_tilde(a)*sigma_tilde(b)",
      chk_homomorphism);
  add("sigma_tilde_inner_cube", "sigma_tilde^3(a) = d*a*d^-1", chk_inner_cube);
  add("aut_inverse_roundtrip", "sigma_tilde^-1 round-trips with sigma_tilde",
      chk_aut_inverse);
  add("minpoly_irred_mod2", "x^3+x^2-2x-1 = x^3+x^2+1 (mod 2), irreducible over F_2",
      chk_minpoly_mod2);
  add("minpoly_cube_mod7", "x^3+x^2-2x-1 = (x-2)^3 (mod 7)", chk_minpoly_mod7);
  add("f_rootless_mod2", "f = x^3 + y*x^2 + (y+1)*x + 1 over F_8, no roots", chk_f_mod2);
  add("f_rootless_modpi", "f = x^3 - 3x + 1 over F_7, no roots", chk_f_modpi);
  add("cubic_irred_crosscheck",
      "plumbing: root search agrees with synthetic division over F_7",
      chk_cubic_crosscheck);
  add("mu_3_in_F7", "mu_3 in F_7 (3 | 7-1)", chk_mu_3_7);
  add("mu_9_not_in_F7", "mu_9 not in F_7 (9 does not divide 7-1)", chk_mu_9_7);
  add("mu_3_not_in_F2", "mu_3 not in F_2 (3 does not divide 2-1)", chk_mu_3_2);
  add("tame_delta_residue",
      "residue of Delta_sigma(a) = sigma(a)/a equals the primitive root zeta "
      "for every uniformizer a",
      chk_tame_delta);
  add("delta_cocycle",
      "Delta_{sigma*tau}(a) = sigma(Delta_tau(a)) * Delta_sigma(a) at residue level",
      chk_delta_cocycle);
  add("valuation_axioms",
      "v(a*b) = v(a)+v(b); v(a+b) >= min(v(a), v(b)), equal when v(a) != v(b)",
      chk_valuation_axioms);
  add("ts_mul_associativity", "(a*b)*c = a*(b*c) within the common window", chk_ts_assoc);
  add("ts_inv_roundtrip", "a * inv(a) = 1 = inv(a) * a within the window", chk_ts_inv);
  add("t_central", "t = d^-1 x^3 commutes with theta, u, x, and random elements",
      chk_t_central);
  add("centre_evidence", "rational series in t = d^-1 x^3 commute with random series",
      chk_centre_evidence);
  return defs;
}

}  // namespace

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Error: return "error";
  }
  return "unknown";
}

const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> defs = build_registry();
  return defs;
}

std::vector<std::pair<std::string, std::string>> list_checks() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const CheckDef& d : check_registry()) out.emplace_back(d.name, d.anchor);
  return out;
}

namespace {

CheckResult run_def(const CheckDef& def, const CheckContext& ctx) {
  CheckResult result{def.name, CheckStatus::Error, "", def.anchor, 0};
  const auto started = std::chrono::steady_clock::now();
  try {
    const auto [ok, detail] = def.run(ctx);
    result.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    result.detail = detail;
  } catch (const Error& e) {
    result.status = CheckStatus::Error;
    result.detail = std::string(error_kind_name(e.kind())) + ": " + e.what();
  } catch (const std::exception& e) {
    result.status = CheckStatus::Error;
    result.detail = std::string("unexpected: ") + e.what();
  }
  const auto elapsed = std::chrono::steady_clock::now() - started;
  result.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  return result;
}

}  // namespace

CheckResult run_check(const std::string& name, const CheckContext& ctx) {
  for (const CheckDef& def : check_registry()) {
    if (def.name == name) return run_def(def, ctx);
  }
  fail(ErrorKind::UnknownCheck, "unknown check '" + name + "'");
}

Report run_all(const CheckContext& ctx) {
  Report report{{}, true};
  for (const CheckDef& def : check_registry()) {
    report.results.push_back(run_def(def, ctx));
    if (report.results.back().status != CheckStatus::Pass) report.all_pass = false;
  }
  return report;
}

std::string report_to_text(const Report& report) {
  std::size_t name_width = 0;
  for (const CheckResult& r : report.results) {
    name_width = std::max(name_width, r.name.size());
  }
  std::ostringstream out;
  int passed = 0;
  for (const CheckResult& r : report.results) {
    std::string status = status_name(r.status);
    for (char& ch : status) ch = static_cast<char>(::toupper(static_cast<unsigned char>(ch)));
    out << status << std::string(6 - status.size(), ' ') << r.name
        << std::string(name_width - r.name.size() + 2, ' ') << r.anchor << "\n";
    if (r.status != CheckStatus::Pass) {
      out << "      -> " << r.detail << "\n";
    }
    if (r.status == CheckStatus::Pass) ++passed;
  }
  out << passed << "/" << report.results.size() << " checks passed\n";
  return out.str();
}

std::string report_to_json(const Report& report) {
  nlohmann::ordered_json doc;
  doc["all_pass"] = report.all_pass;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& r : report.results) {
    nlohmann::ordered_json item;
    item["name"] = r.name;
    item["status"] = status_name(r.status);
    item["detail"] = r.detail;
    item["elapsed_ms"] = r.elapsed_ms;
    item["anchor"] = r.anchor;
    doc["checks"].push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

}  // namespace skv
