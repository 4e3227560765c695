#include <doctest.h>

#include "algebra_d.hpp"

using namespace skv;

namespace {

KElem k(long a0, long a1, long a2) {
  return KElem(Rational(a0), Rational(a1), Rational(a2));
}

KElem k673(long a0, long a1, long a2) {
  return KElem(rat(a0, 673), rat(a1, 673), rat(a2, 673));
}

}  // namespace

TEST_CASE("u relations") {
  const DElem u = DElem::u();
  CHECK(two_pi() == k(-4, -2, 2));
  CHECK(u * u * u == DElem::from_k(two_pi()));
  CHECK(u * DElem::theta() == DElem::from_l(phi(LElem::theta())) * u);
  CHECK(u * DElem::theta() != DElem::theta() * u);
  // central scalars commute with everything
  const DElem pi_d = DElem::from_k(k_pi());
  CHECK(pi_d * u == u * pi_d);
  CHECK(pi_d * DElem::theta() == DElem::theta() * pi_d);
}

TEST_CASE("products against worked examples") {
  const DElem tu = DElem::theta() * DElem::u();
  // (theta*u)^2 = (1 + (1-alpha)theta - theta^2) u^2
  CHECK(tu * tu ==
        DElem(LElem::zero(), LElem::zero(),
              LElem(k(1, 0, 0), k(1, -1, 0), k(-1, 0, 0))));
  // (theta u^2)(alpha u^2) = ((2-4alpha^2) theta) u
  const DElem a = DElem(LElem::zero(), LElem::zero(), LElem::theta());
  const DElem b = DElem(LElem::zero(), LElem::zero(),
                        LElem::from_k(KElem::alpha()));
  CHECK(a * b ==
        DElem(LElem::zero(), LElem(KElem::zero(), k(2, 0, -4), KElem::zero()),
              LElem::zero()));
}

TEST_CASE("inverses in D") {
  // u^-1 = (2 pi)^-1 u^2
  CHECK(DElem::u().inverse() ==
        DElem(LElem::zero(), LElem::zero(),
              LElem::from_k(KElem(rat(-3, 7), rat(-1, 14), rat(1, 7)))));
  CHECK_THROWS_AS(DElem::zero().inverse(), Error);
  SplitMix64 rng(7);
  for (int i = 0; i < 10; ++i) {
    const DElem x = random_d(rng);
    if (x.is_zero()) continue;
    const DElem inv = x.inverse();
    CHECK(x * inv == DElem::one());
    CHECK(inv * x == DElem::one());
  }
}

TEST_CASE("builtin constants satisfy every relation") {
  CHECK_NOTHROW(OuterAut::checked(builtin_theta_image(), builtin_u_image()));
  CHECK_NOTHROW(InnerWitness::checked(builtin_aut(), builtin_inner_d()));
  for (const NamedFlag& f : check_relations(builtin_aut(), builtin_witness())) {
    INFO(f.name);
    CHECK(f.holds);
  }
  CHECK(builtin_aut().lambda() == l_lambda());
}

TEST_CASE("sigma_tilde on a mixed element") {
  // sigma_tilde(theta u^2), coordinates over 673
  const DElem input(LElem::zero(), LElem::zero(), LElem::theta());
  const DElem expected(
      LElem(k673(-252, 152, 540), k673(2220, 712, -1296), k673(-656, -288, 252)),
      LElem(k673(436, -498, -742), k673(-520, 100, -424), k673(404, 440, 288)),
      LElem(k673(70, -117, -150), k673(822, 49, -800), k673(-135, -207, 97)));
  CHECK(builtin_aut().apply(input) == expected);
}

TEST_CASE("sigma_tilde restricted to K and L") {
  const DElem alpha_d = DElem::from_k(KElem::alpha());
  CHECK(builtin_aut().apply(alpha_d) == DElem::from_k(sigma(KElem::alpha())));
  CHECK(builtin_aut().apply(DElem::one()) == DElem::one());
  CHECK(builtin_aut().apply(DElem::theta()) == builtin_theta_image());
  CHECK(builtin_aut().apply(DElem::u()) == builtin_u_image());
}

TEST_CASE("inner witness inverse, u^0 block") {
  // d^-1 coordinates: denominators 7*673^2 = 3170503 and 673^2 = 452929
  const LElem u0(
      KElem(rat(5151, 3170503), rat(226, 3170503), rat(1653, 3170503)),
      KElem(rat(19692, 3170503), rat(-859, 452929), rat(-13162, 3170503)),
      KElem(rat(-9613, 3170503), rat(425, 3170503), rat(3582, 3170503)));
  CHECK(builtin_witness().inverse().coeff(0) == u0);
  CHECK(builtin_witness().value() * builtin_witness().inverse() == DElem::one());
  CHECK(builtin_witness().inverse() * builtin_witness().value() == DElem::one());
}

TEST_CASE("aut inverse round-trips") {
  SplitMix64 rng(11);
  const OuterAut& aut = builtin_aut();
  const InnerWitness& w = builtin_witness();
  for (int i = 0; i < 5; ++i) {
    const DElem x = random_d(rng);
    CHECK(aut_inverse_apply(aut, w, aut.apply(x)) == x);
    CHECK(aut.apply(aut_inverse_apply(aut, w, x)) == x);
  }
}

TEST_CASE("checked constructors reject corrupted constants") {
  // lambda := 1 breaks U^3 = sigma(2 pi)
  const DElem bad_u(LElem::zero(), LElem::one(), LElem::zero());
  CHECK_THROWS_AS(OuterAut::checked(builtin_theta_image(), bad_u), Error);
  // d := 1 breaks the conjugation identities
  CHECK_THROWS_AS(InnerWitness::checked(builtin_aut(), DElem::one()), Error);
}

TEST_CASE("polynomial evaluation in D") {
  CHECK(eval_poly_in_d(f_poly(), 0, DElem::theta()) == DElem::zero());
  // f^sigma kills sigma_tilde(theta)
  CHECK(eval_poly_in_d(f_poly(), 1, builtin_theta_image()) == DElem::zero());
  CHECK(eval_poly_in_d(f_poly(), 1, DElem::theta()) != DElem::zero());
}
