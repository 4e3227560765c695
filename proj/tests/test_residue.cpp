#include <doctest.h>

#include "residue.hpp"

using namespace skv;

TEST_CASE("finite field construction") {
  const FiniteField f7(7);
  CHECK(f7.p() == 7);
  CHECK(f7.degree() == 1);
  CHECK(f7.size() == 7);
  const FiniteField f8(2, {1, 0, 1, 1});  // y^3 + y^2 + 1
  CHECK(f8.size() == 8);
  // y^3 + x^2 + x + 1 has the root 1, so it must be rejected
  CHECK_THROWS_AS(FiniteField(2, std::vector<int>{1, 1, 1, 1}), Error);
  CHECK_THROWS_AS(FiniteField(4), Error);  // not prime
}

TEST_CASE("F_8 arithmetic") {
  const FiniteField f8 = residue_field(ResiduePrime::Two);
  const FqElem y = FqElem::gen(f8);
  CHECK(y.mult_order() == 7);  // F_8^* is cyclic of order 7
  CHECK(y * y * y == y * y + FqElem::one(f8));  // y^3 = y^2 + 1
  CHECK(y + y == FqElem::zero(f8));
  CHECK(y * y.inverse() == FqElem::one(f8));
  CHECK(y.pow(7) == FqElem::one(f8));
  // enumeration covers all 8 elements exactly once
  int nonzero = 0;
  for (long i = 0; i < f8.size(); ++i) {
    if (!FqElem::from_index(f8, i).is_zero()) ++nonzero;
  }
  CHECK(nonzero == 7);
}

TEST_CASE("minimal polynomial at small primes") {
  const CubicPoly<FqElem> m2 = reduce_minpoly_mod(2);
  const FiniteField f2(2);
  CHECK(m2.c3 == FqElem(f2, 1));
  CHECK(m2.c2 == FqElem(f2, 1));
  CHECK(m2.c1 == FqElem(f2, 0));
  CHECK(m2.c0 == FqElem(f2, 1));
  CHECK(cubic_is_irreducible(m2));

  const CubicPoly<FqElem> m3 = reduce_minpoly_mod(3);
  const FiniteField f3(3);
  CHECK(m3.c2 == FqElem(f3, 1));
  CHECK(m3.c1 == FqElem(f3, 1));
  CHECK(m3.c0 == FqElem(f3, 2));
  CHECK(cubic_is_irreducible(m3));

  CHECK(total_ramification_witness_7() == FqElem(FiniteField(7), 2));
}

TEST_CASE("reduction of f at the residue primes") {
  const CubicPoly<FqElem> at2 = reduce_f_at_residue(ResiduePrime::Two);
  const FiniteField f8 = residue_field(ResiduePrime::Two);
  const FqElem y = FqElem::gen(f8);
  CHECK(at2.c3 == FqElem::one(f8));
  CHECK(at2.c2 == y);
  CHECK(at2.c1 == y + FqElem::one(f8));
  CHECK(at2.c0 == FqElem::one(f8));
  CHECK(cubic_is_irreducible(at2));

  const CubicPoly<FqElem> at7 = reduce_f_at_residue(ResiduePrime::Pi);
  const FiniteField f7(7);
  CHECK(at7.c3 == FqElem(f7, 1));
  CHECK(at7.c2 == FqElem(f7, 0));
  CHECK(at7.c1 == FqElem(f7, 4));
  CHECK(at7.c0 == FqElem(f7, 1));
  CHECK(cubic_is_irreducible(at7));
}

TEST_CASE("residue maps on K") {
  // pi itself reduces to 0 at (pi): alpha -> 2 sends alpha^2-alpha-2 to 0
  CHECK(reduce_k_at(ResiduePrime::Pi, k_pi()).is_zero());
  const FiniteField f8 = residue_field(ResiduePrime::Two);
  CHECK(reduce_k_at(ResiduePrime::Two, KElem::alpha()) == FqElem::gen(f8));
  // denominators coprime to the characteristic are inverted exactly
  const FiniteField f7(7);
  CHECK(reduce_k_at(ResiduePrime::Pi,
                    KElem(rat(1, 2), Rational(0), Rational(0))) == FqElem(f7, 4));
  CHECK_THROWS_AS(
      reduce_k_at(ResiduePrime::Pi, KElem(rat(1, 7), Rational(0), Rational(0))),
      Error);
}

TEST_CASE("roots of unity in residue fields") {
  CHECK(mu_in_fq(3, 7));
  CHECK(mu_in_fq(2, 7));
  CHECK(mu_in_fq(6, 7));
  CHECK(!mu_in_fq(9, 7));
  CHECK(!mu_in_fq(3, 2));
  CHECK(!mu_in_fq(4, 7));
  CHECK_THROWS_AS(mu_in_fq(7, 7), Error);  // gcd(n, q) must be 1
  CHECK_THROWS_AS(mu_in_fq(1, 7), Error);

  const FiniteField f7(7);
  CHECK(primitive_root_of_unity(f7, 2) == FqElem(f7, 6));
  CHECK(primitive_root_of_unity(f7, 3) == FqElem(f7, 2));
  CHECK(primitive_root_of_unity(f7, 6) == FqElem(f7, 3));
  CHECK(primitive_root_of_unity(f7, 3).mult_order() == 3);
}

TEST_CASE("residue series arithmetic") {
  const FiniteField f7(7);
  ResidueSeries s(f7, 1, 1 + kResidueSeriesPrecision);
  s.set_coeff(1, FqElem(f7, 1));
  CHECK(s.valuation() == 1);
  const ResidueSeries inv = s.inverse();
  CHECK(inv.valuation() == -1);
  const ResidueSeries prod = s * inv;
  CHECK(prod.coeff_at(0) == FqElem(f7, 1));
  for (std::int64_t e = 1; e < prod.cutoff(); ++e) {
    CHECK(prod.coeff_at(e).is_zero());
  }
  // below-window coefficients read as zero; beyond-cutoff reads throw
  CHECK(s.coeff_at(0).is_zero());
  CHECK_THROWS_AS(s.coeff_at(s.cutoff()), Error);

  const FqElem zeta(f7, 2);
  const ResidueSeries twisted = s.apply_zeta(zeta);
  CHECK(twisted.coeff_at(1) == FqElem(f7, 2));
}

TEST_CASE("tame quotient residue") {
  const FiniteField f7(7);
  ResidueSeries s(f7, 1, 1 + kResidueSeriesPrecision);
  s.set_coeff(1, FqElem(f7, 1));
  CHECK(tame_delta_residue(f7, 3, s) == FqElem(f7, 2));
  CHECK(tame_delta_residue(f7, 2, s) == FqElem(f7, 6));
  CHECK(tame_delta_residue(f7, 6, s) == FqElem(f7, 3));
  // s + s^2 is still a uniformizer with the same residue
  s.set_coeff(2, FqElem(f7, 1));
  CHECK(tame_delta_residue(f7, 3, s) == FqElem(f7, 2));
  // valuation-2 series are rejected
  ResidueSeries sq(f7, 2, 2 + kResidueSeriesPrecision);
  sq.set_coeff(2, FqElem(f7, 1));
  CHECK_THROWS_AS(tame_delta_residue(f7, 3, sq), Error);

  SplitMix64 rng(5);
  for (int i = 0; i < 10; ++i) {
    const ResidueSeries a = random_uniformizer(f7, rng);
    CHECK(tame_delta_residue(f7, 3, a) == FqElem(f7, 2));
  }
}
