#include <doctest.h>

#include "rational.hpp"

using namespace skv;

TEST_CASE("rational construction and canonical form") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(-2, -4) == rat(1, 2));
  CHECK(rat(2, -4) == rat(-1, 2));
  CHECK(rat(0, 5) == Rational(0));
  CHECK(to_string(rat(-3, 7)) == "-3/7");
  CHECK(to_string(Rational(5)) == "5");
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == rat(3, 4));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("0") == Rational(0));
  CHECK(parse_rational("-6/8") == rat(-3, 4));
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("1/2/3"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  try {
    parse_rational("1/0");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonRational);
  }
}

TEST_CASE("rational inverse") {
  CHECK(field_inverse(rat(3, 4)) == rat(4, 3));
  CHECK(field_inverse(Rational(-2)) == rat(-1, 2));
  CHECK_THROWS_AS(field_inverse(Rational(0)), Error);
  CHECK(is_zero(Rational(0)));
  CHECK(!is_zero(rat(1, 999)));
}
