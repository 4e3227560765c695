#include "field_tower.hpp"

#include <vector>

#include "linalg.hpp"

namespace skv {

namespace {

// alpha^3 = -alpha^2 + 2*alpha + 1
void reduce_alpha(std::array<Rational, 5>& r) {
  for (int k = 4; k >= 3; --k) {
    if (is_zero(r[k])) continue;
    r[k - 1] -= r[k];
    r[k - 2] += 2 * r[k];
    r[k - 3] += r[k];
    r[k] = 0;
  }
}

std::string monomial_str(const Rational& q, const char* name, int power) {
  std::string s = to_string(q);
  if (power == 0) return s;
  s += "*";
  s += name;
  if (power > 1) s += "^" + std::to_string(power);
  return s;
}

template <typename Coeff>
std::string poly_str(const std::array<Coeff, 3>& c,
                     bool (*zero)(const Coeff&), std::string (*fmt)(const Coeff&, int)) {
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (zero(c[static_cast<std::size_t>(i)])) continue;
    if (!out.empty()) out += " + ";
    out += fmt(c[static_cast<std::size_t>(i)], i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

bool KElem::is_zero() const {
  return skv::is_zero(c_[0]) && skv::is_zero(c_[1]) && skv::is_zero(c_[2]);
}

bool KElem::is_rational() const {
  return skv::is_zero(c_[1]) && skv::is_zero(c_[2]);
}

Rational KElem::rational_part() const {
  if (!is_rational()) {
    fail(ErrorKind::Inconsistency, "element has nonzero alpha coordinates: " + str());
  }
  return c_[0];
}

KElem operator+(const KElem& a, const KElem& b) {
  return KElem(a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2]);
}

KElem operator-(const KElem& a, const KElem& b) {
  return KElem(a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2]);
}

KElem operator-(const KElem& a) {
  return KElem(-a.c_[0], -a.c_[1], -a.c_[2]);
}

KElem operator*(const KElem& a, const KElem& b) {
  std::array<Rational, 5> r{Rational(0), Rational(0), Rational(0), Rational(0),
                            Rational(0)};
  for (int i = 0; i < 3; ++i) {
    if (skv::is_zero(a.c_[static_cast<std::size_t>(i)])) continue;
    for (int j = 0; j < 3; ++j) {
      r[static_cast<std::size_t>(i + j)] +=
          a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
    }
  }
  reduce_alpha(r);
  return KElem(std::move(r[0]), std::move(r[1]), std::move(r[2]));
}

KElem KElem::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in K");
  // Column j of the system is the coordinate vector of (*this) * alpha^j.
  std::vector<std::vector<Rational>> m(3, std::vector<Rational>(3));
  KElem power = KElem::one();
  for (int j = 0; j < 3; ++j) {
    const KElem col = *this * power;
    for (int i = 0; i < 3; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col.coeff(i);
    power = power * KElem::alpha();
  }
  auto x = solve_linear<Rational>(std::move(m), {Rational(1), Rational(0), Rational(0)});
  if (!x) fail(ErrorKind::Inconsistency, "singular inverse system in the field K");
  return KElem((*x)[0], (*x)[1], (*x)[2]);
}

std::string KElem::str() const {
  return poly_str<Rational>(
      c_, [](const Rational& q) { return skv::is_zero(q); },
      [](const Rational& q, int power) { return monomial_str(q, "alpha", power); });
}

KElem sigma(const KElem& a, int power) {
  // sigma(alpha) and sigma^2(alpha), reduced mod the minimal polynomial.
  static const KElem kImage1(Rational(1), Rational(-1), Rational(-1));
  static const KElem kImage2(Rational(-2), Rational(0), Rational(1));
  const int p = ((power % 3) + 3) % 3;
  if (p == 0) return a;
  const KElem& img = (p == 1) ? kImage1 : kImage2;
  return KElem::from_rational(a.coeff(0)) +
         KElem::from_rational(a.coeff(1)) * img +
         KElem::from_rational(a.coeff(2)) * (img * img);
}

Rational norm_k_to_q(const KElem& a) {
  const KElem n = a * sigma(a) * sigma(a, 2);
  if (!n.is_rational()) {
    fail(ErrorKind::Inconsistency, "norm left K: " + n.str());
  }
  return n.rational_part();
}

const KElem& k_pi() {
  static const KElem pi(Rational(-2), Rational(-1), Rational(1));
  return pi;
}

KElem random_k(SplitMix64& rng) {
  Rational a0 = random_coord(rng);
  Rational a1 = random_coord(rng);
  Rational a2 = random_coord(rng);
  return KElem(std::move(a0), std::move(a1), std::move(a2));
}

bool LElem::is_zero() const {
  return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero();
}

bool LElem::is_in_k() const { return c_[1].is_zero() && c_[2].is_zero(); }

KElem LElem::k_part() const {
  if (!is_in_k()) {
    fail(ErrorKind::Inconsistency, "element has nonzero theta coordinates: " + str());
  }
  return c_[0];
}

LElem operator+(const LElem& a, const LElem& b) {
  return LElem(a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2]);
}

LElem operator-(const LElem& a, const LElem& b) {
  return LElem(a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2]);
}

LElem operator-(const LElem& a) { return LElem(-a.c_[0], -a.c_[1], -a.c_[2]); }

LElem operator*(const LElem& a, const LElem& b) {
  std::array<KElem, 5> r;
  for (int i = 0; i < 3; ++i) {
    if (a.c_[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < 3; ++j) {
      r[static_cast<std::size_t>(i + j)] =
          r[static_cast<std::size_t>(i + j)] +
          a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
    }
  }
  // theta^3 = -(alpha-2)*theta^2 + (alpha+1)*theta - 1
  static const KElem kC2(Rational(2), Rational(-1), Rational(0));   // 2 - alpha
  static const KElem kC1(Rational(1), Rational(1), Rational(0));    // alpha + 1
  for (int k = 4; k >= 3; --k) {
    const KElem& top = r[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    r[static_cast<std::size_t>(k - 1)] = r[static_cast<std::size_t>(k - 1)] + kC2 * top;
    r[static_cast<std::size_t>(k - 2)] = r[static_cast<std::size_t>(k - 2)] + kC1 * top;
    r[static_cast<std::size_t>(k - 3)] = r[static_cast<std::size_t>(k - 3)] - top;
    r[static_cast<std::size_t>(k)] = KElem::zero();
  }
  return LElem(std::move(r[0]), std::move(r[1]), std::move(r[2]));
}

LElem LElem::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in L");
  std::vector<std::vector<KElem>> m(3, std::vector<KElem>(3));
  LElem power = LElem::one();
  for (int j = 0; j < 3; ++j) {
    const LElem col = *this * power;
    for (int i = 0; i < 3; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col.coeff(i);
    power = power * LElem::theta();
  }
  auto x = solve_linear<KElem>(std::move(m), {KElem::one(), KElem::zero(), KElem::zero()});
  if (!x) fail(ErrorKind::Inconsistency, "singular inverse system in the field L");
  return LElem((*x)[0], (*x)[1], (*x)[2]);
}

std::string LElem::str() const {
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (c_[static_cast<std::size_t>(i)].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c_[static_cast<std::size_t>(i)].str() + ")";
    if (i >= 1) out += "*theta";
    if (i == 2) out += "^2";
  }
  return out.empty() ? "0" : out;
}

LElem phi(const LElem& a, int power) {
  // phi(theta) = -theta^2 + (-alpha+1)*theta + 2 and its square
  // phi^2(theta) = theta^2 + (alpha-2)*theta - alpha; phi fixes K.
  static const LElem kImage1(KElem::from_int(2),
                             KElem(Rational(1), Rational(-1), Rational(0)),
                             KElem::from_int(-1));
  static const LElem kImage2(KElem(Rational(0), Rational(-1), Rational(0)),
                             KElem(Rational(-2), Rational(1), Rational(0)),
                             KElem::one());
  const int p = ((power % 3) + 3) % 3;
  if (p == 0) return a;
  const LElem& img = (p == 1) ? kImage1 : kImage2;
  return LElem::from_k(a.coeff(0)) + a.coeff(1) * img + a.coeff(2) * (img * img);
}

KElem norm_l_to_k(const LElem& a) {
  const LElem n = a * phi(a) * phi(a, 2);
  if (!n.is_in_k()) {
    fail(ErrorKind::Inconsistency, "norm left L: " + n.str());
  }
  return n.k_part();
}

const LElem& l_lambda() {
  static const LElem lambda(KElem(Rational(0), Rational(1), Rational(1)),
                            KElem(Rational(1), Rational(-1), Rational(0)),
                            KElem::from_int(-1));
  return lambda;
}

LElem random_l(SplitMix64& rng) {
  KElem l0 = random_k(rng);
  KElem l1 = random_k(rng);
  KElem l2 = random_k(rng);
  return LElem(std::move(l0), std::move(l1), std::move(l2));
}

CubicPoly<Rational> minpoly_alpha() {
  return CubicPoly<Rational>{Rational(1), Rational(1), Rational(-2), Rational(-1)};
}

CubicPoly<KElem> f_poly() {
  return CubicPoly<KElem>{KElem::one(),
                          KElem(Rational(-2), Rational(1), Rational(0)),
                          KElem(Rational(-1), Rational(-1), Rational(0)),
                          KElem::one()};
}

}  // namespace skv
