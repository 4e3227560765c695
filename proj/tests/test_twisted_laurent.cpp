#include <doctest.h>

#include "twisted_laurent.hpp"

using namespace skv;

TEST_CASE("series windows and coefficient access") {
  TSeries a(0, 4);
  a.set_coeff(1, DElem::theta());
  CHECK(a.coeff_at(1) == DElem::theta());
  CHECK(a.coeff_at(0) == DElem::zero());
  CHECK(a.coeff_at(-5) == DElem::zero());  // known zero below the window
  CHECK_THROWS_AS(a.coeff_at(4), Error);   // unknown at the cutoff
  a.set_coeff(1, DElem::zero());           // zeros are erased, not stored
  CHECK(a.vanishes_on_window());
  CHECK_THROWS_AS(TSeries(3, 3), Error);   // empty window

  const TSeries m = TSeries::monomial(DElem::u(), -2);
  CHECK(m.exact());
  CHECK(m.coeff_at(-2) == DElem::u());
  CHECK(m.coeff_at(1000) == DElem::zero());
}

TEST_CASE("twisting rule in products") {
  const TwistContext& ctx = TwistContext::builtin();
  const TSeries x = TSeries::monomial(DElem::one(), 1);
  const TSeries theta0 = TSeries::monomial(DElem::theta(), 0);
  // x * theta = sigma_tilde(theta) * x
  CHECK(ts_mul(ctx, x, theta0) ==
        TSeries::monomial(ctx.aut.apply(DElem::theta()), 1));
  CHECK(ts_mul(ctx, theta0, x) == TSeries::monomial(DElem::theta(), 1));
  // x^-1 * theta = sigma_tilde^-1(theta) * x^-1
  const TSeries xinv = TSeries::monomial(DElem::one(), -1);
  CHECK(ts_mul(ctx, xinv, theta0) ==
        TSeries::monomial(twist_power(ctx, DElem::theta(), -1), -1));
}

TEST_CASE("window propagation") {
  const TwistContext& ctx = TwistContext::builtin();
  TSeries a(0, 3);
  a.set_coeff(0, DElem::one());
  TSeries b(1, 4);
  b.set_coeff(1, DElem::one());
  const TSeries p = ts_mul(ctx, a, b);
  CHECK(p.window_start() == 1);
  CHECK(p.cutoff() == 4);  // min(0+4, 1+3)
  const TSeries s = ts_add(a, b);
  CHECK(s.window_start() == 0);
  CHECK(s.cutoff() == 3);
  // exact * windowed keeps the windowed cutoff shifted by the exact start
  const TSeries m = TSeries::monomial(DElem::one(), 2);
  CHECK(ts_mul(ctx, m, a).cutoff() == 5);
  CHECK(ts_mul(ctx, m, a).exact() == false);
}

TEST_CASE("valuation") {
  TSeries a(-2, 5);
  CHECK(ts_valuation(a) == XadicValue::infinity());
  a.set_coeff(3, DElem::u());
  CHECK(ts_valuation(a) == XadicValue::at(3));
  a.set_coeff(-2, DElem::theta());
  CHECK(ts_valuation(a) == XadicValue::at(-2));
  CHECK(ts_valuation(TSeries::one()) == XadicValue::at(0));
}

TEST_CASE("series inversion") {
  const TwistContext& ctx = TwistContext::builtin();
  // exact monomials invert exactly
  const TSeries x = TSeries::monomial(DElem::one(), 1);
  CHECK(ts_inv(ctx, x) == TSeries::monomial(DElem::one(), -1));
  const TSeries c = TSeries::monomial(DElem::theta(), 0);
  CHECK(ts_inv(ctx, c) == TSeries::monomial(DElem::theta().inverse(), 0));
  CHECK_THROWS_AS(ts_inv(ctx, TSeries::zero()), Error);

  // a two-term series round-trips on its window
  TSeries a(0, 6);
  a.set_coeff(0, DElem::one());
  a.set_coeff(2, DElem::theta());
  const TSeries s = ts_inv(ctx, a);
  CHECK(is_one_on_window(ts_mul(ctx, a, s)));
  CHECK(is_one_on_window(ts_mul(ctx, s, a)));

  // an exact non-monomial gets the requested precision
  TSeries e = ts_add(TSeries::monomial(DElem::one(), 0),
                     TSeries::monomial(DElem::u(), 1));
  const TSeries se = ts_inv(ctx, e, 8);
  CHECK(se.cutoff() - se.window_start() == 8);
  CHECK(is_one_on_window(ts_mul(ctx, e, se)));
}

TEST_CASE("negative twists round-trip") {
  const TwistContext& ctx = TwistContext::builtin();
  SplitMix64 rng(19);
  for (int i = 0; i < 5; ++i) {
    const DElem a = random_d(rng);
    CHECK(twist_power(ctx, twist_power(ctx, a, 3), -3) == a);
    CHECK(twist_power(ctx, a, -1) ==
          aut_inverse_apply(ctx.aut, ctx.witness, a));
    CHECK(twist_power(ctx, a, 0) == a);
  }
}

TEST_CASE("t is central") {
  const TwistContext& ctx = TwistContext::builtin();
  const TSeries t = make_t(ctx.witness);
  CHECK(ts_valuation(t) == XadicValue::at(3));
  const TSeries x = TSeries::monomial(DElem::one(), 1);
  CHECK(ts_mul(ctx, t, x) == ts_mul(ctx, x, t));
  SplitMix64 rng = rng_for(0, "t_central");
  for (const NamedFlag& f : check_t_central(ctx, rng)) {
    INFO(f.name);
    CHECK(f.holds);
  }
}

TEST_CASE("t stops being central when d is overridden") {
  const TwistContext broken{OuterAut::unchecked(builtin_theta_image(), builtin_u_image()),
                            InnerWitness::unchecked(DElem::one())};
  SplitMix64 rng = rng_for(0, "t_central");
  bool all = true;
  for (const NamedFlag& f : check_t_central(broken, rng)) all = all && f.holds;
  CHECK(!all);
}
