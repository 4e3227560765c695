#include "algebra_d.hpp"

#include <vector>

#include "linalg.hpp"

namespace skv {

namespace {

// Theta = sigma_tilde(theta) = (1/673) * sum_{i,j} kThetaNum[i][j] theta^i u^j
// with each entry a K element given as (a0, a1, a2) for a0 + a1*alpha +
// a2*alpha^2.  Row index is the theta power, column index the u power.
constexpr long kThetaDen = 673;
constexpr long kThetaNum[3][3][3] = {
    {{-276, -154, 303}, {-326, 218, 314}, {157, 151, -48}},
    {{-855, 708, 390}, {430, -238, 40}, {275, -27, -397}},
    {{543, 25, -106}, {-30, -46, -128}, {-63, 38, 135}},
};

// d = sum_{i,j} kInnerDNum[i][j] theta^i u^j, same layout as above.
constexpr long kInnerDNum[3][3][3] = {
    {{136, 536, 468}, {184, -30, -52}, {77, -357, -126}},
    {{-624, -244, 628}, {-574, -14, 350}, {-201, -163, 151}},
    {{324, -240, -416}, {-84, 14, -14}, {-124, 166, 74}},
};

KElem k_from_triple(const long (&t)[3], long den) {
  return KElem(rat(t[0], den), rat(t[1], den), rat(t[2], den));
}

DElem d_from_table(const long (&table)[3][3][3], long den) {
  // table[i][j]: i = theta power, j = u power; DElem stores u-power slices.
  std::array<LElem, 3> slices;
  for (int j = 0; j < 3; ++j) {
    slices[static_cast<std::size_t>(j)] =
        LElem(k_from_triple(table[0][j], den), k_from_triple(table[1][j], den),
              k_from_triple(table[2][j], den));
  }
  return DElem(slices[0], slices[1], slices[2]);
}

}  // namespace

bool DElem::is_zero() const {
  return e_[0].is_zero() && e_[1].is_zero() && e_[2].is_zero();
}

DElem operator+(const DElem& a, const DElem& b) {
  return DElem(a.e_[0] + b.e_[0], a.e_[1] + b.e_[1], a.e_[2] + b.e_[2]);
}

DElem operator-(const DElem& a, const DElem& b) {
  return DElem(a.e_[0] - b.e_[0], a.e_[1] - b.e_[1], a.e_[2] - b.e_[2]);
}

DElem operator-(const DElem& a) { return DElem(-a.e_[0], -a.e_[1], -a.e_[2]); }

DElem operator*(const DElem& a, const DElem& b) {
  // (l*u^i)(m*u^j) = l*phi^i(m)*u^{i+j}, with u^3 folding to the scalar 2*pi.
  std::array<LElem, 5> r;
  for (int i = 0; i < 3; ++i) {
    if (a.e_[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < 3; ++j) {
      if (b.e_[static_cast<std::size_t>(j)].is_zero()) continue;
      r[static_cast<std::size_t>(i + j)] =
          r[static_cast<std::size_t>(i + j)] +
          a.e_[static_cast<std::size_t>(i)] * phi(b.e_[static_cast<std::size_t>(j)], i);
    }
  }
  const LElem scalar = LElem::from_k(two_pi());
  for (int k = 4; k >= 3; --k) {
    if (r[static_cast<std::size_t>(k)].is_zero()) continue;
    r[static_cast<std::size_t>(k - 3)] =
        r[static_cast<std::size_t>(k - 3)] + r[static_cast<std::size_t>(k)] * scalar;
    r[static_cast<std::size_t>(k)] = LElem::zero();
  }
  return DElem(std::move(r[0]), std::move(r[1]), std::move(r[2]));
}

DElem operator*(const KElem& k, const DElem& a) {
  const LElem scalar = LElem::from_k(k);
  return DElem(scalar * a.coeff(0), scalar * a.coeff(1), scalar * a.coeff(2));
}

DElem DElem::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in D");
  // Column m = coordinates of (*this) * theta^j u^i with m = 3i + j; rows use
  // the same indexing.  Solving over K keeps pivots large and exact.
  std::vector<std::vector<KElem>> m(9, std::vector<KElem>(9));
  std::vector<KElem> rhs(9, KElem::zero());
  rhs[0] = KElem::one();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      LElem basis_l = LElem::zero();
      {
        std::array<KElem, 3> c{KElem::zero(), KElem::zero(), KElem::zero()};
        c[static_cast<std::size_t>(j)] = KElem::one();
        basis_l = LElem(c[0], c[1], c[2]);
      }
      std::array<LElem, 3> e{LElem::zero(), LElem::zero(), LElem::zero()};
      e[static_cast<std::size_t>(i)] = basis_l;
      const DElem col_elem = *this * DElem(e[0], e[1], e[2]);
      const std::size_t col = static_cast<std::size_t>(3 * i + j);
      for (int ci = 0; ci < 3; ++ci) {
        for (int cj = 0; cj < 3; ++cj) {
          m[static_cast<std::size_t>(3 * ci + cj)][col] = col_elem.coord(ci, cj);
        }
      }
    }
  }
  auto x = solve_linear<KElem>(std::move(m), std::move(rhs));
  if (!x) {
    fail(ErrorKind::SingularElement,
         "singular inverse system in D (zero divisor?): " + str());
  }
  std::array<LElem, 3> e;
  for (int i = 0; i < 3; ++i) {
    e[static_cast<std::size_t>(i)] =
        LElem((*x)[static_cast<std::size_t>(3 * i + 0)],
              (*x)[static_cast<std::size_t>(3 * i + 1)],
              (*x)[static_cast<std::size_t>(3 * i + 2)]);
  }
  DElem inv(e[0], e[1], e[2]);
  if (*this * inv != DElem::one() || inv * *this != DElem::one()) {
    fail(ErrorKind::Inconsistency, "one-sided inverse in D: " + str());
  }
  return inv;
}

std::string DElem::str() const {
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (e_[static_cast<std::size_t>(i)].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + e_[static_cast<std::size_t>(i)].str() + ")";
    if (i >= 1) out += "*u";
    if (i == 2) out += "^2";
  }
  return out.empty() ? "0" : out;
}

const KElem& two_pi() {
  static const KElem v = KElem::from_int(2) * k_pi();
  return v;
}

DElem random_d(SplitMix64& rng) {
  LElem e0 = random_l(rng);
  LElem e1 = random_l(rng);
  LElem e2 = random_l(rng);
  return DElem(std::move(e0), std::move(e1), std::move(e2));
}

DElem eval_poly_in_d(const CubicPoly<KElem>& p, int twist, const DElem& a) {
  const DElem a2 = a * a;
  const DElem a3 = a2 * a;
  return sigma(p.c3, twist) * a3 + sigma(p.c2, twist) * a2 +
         sigma(p.c1, twist) * a + DElem::from_k(sigma(p.c0, twist));
}

OuterAut::OuterAut(DElem theta_image, DElem u_image)
    : theta_image_(std::move(theta_image)), u_image_(std::move(u_image)) {
  std::array<DElem, 3> theta_pow{DElem::one(), theta_image_,
                                 theta_image_ * theta_image_};
  std::array<DElem, 3> u_pow{DElem::one(), u_image_, u_image_ * u_image_};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      basis_image_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          theta_pow[static_cast<std::size_t>(j)] * u_pow[static_cast<std::size_t>(i)];
    }
  }
}

OuterAut OuterAut::unchecked(DElem theta_image, DElem u_image) {
  return OuterAut(std::move(theta_image), std::move(u_image));
}

OuterAut OuterAut::checked(DElem theta_image, DElem u_image) {
  OuterAut aut(std::move(theta_image), std::move(u_image));
  const DElem& th = aut.theta_image_;
  const DElem& uu = aut.u_image_;
  if (uu * uu * uu != DElem::from_k(sigma(two_pi()))) {
    fail(ErrorKind::Inconsistency, "sigma_tilde(u)^3 != sigma(2*pi)");
  }
  if (uu * th != aut.apply(DElem::from_l(phi(LElem::theta()))) * uu) {
    fail(ErrorKind::Inconsistency,
         "sigma_tilde(u)*sigma_tilde(theta) != sigma_tilde(phi(theta))*sigma_tilde(u)");
  }
  if (eval_poly_in_d(f_poly(), 1, th) != DElem::zero()) {
    fail(ErrorKind::Inconsistency, "f^sigma(sigma_tilde(theta)) != 0");
  }
  return aut;
}

DElem OuterAut::apply(const DElem& a, int power) const {
  DElem cur = a;
  for (int step = 0; step < power; ++step) {
    DElem acc = DElem::zero();
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const KElem& k = cur.coord(i, j);
        if (k.is_zero()) continue;
        acc = acc + sigma(k) * basis_image_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      }
    }
    cur = std::move(acc);
  }
  return cur;
}

InnerWitness::InnerWitness(DElem d, DElem d_inverse)
    : d_(std::move(d)), d_inverse_(std::move(d_inverse)) {}

InnerWitness InnerWitness::unchecked(DElem d) {
  DElem inv = d.inverse();
  return InnerWitness(std::move(d), std::move(inv));
}

InnerWitness InnerWitness::checked(const OuterAut& aut, DElem d) {
  InnerWitness w = unchecked(std::move(d));
  if (aut.apply(w.d_) != w.d_) {
    fail(ErrorKind::Inconsistency, "sigma_tilde(d) != d");
  }
  const DElem theta = DElem::theta();
  const DElem u = DElem::u();
  if (aut.apply(theta, 3) != w.d_ * theta * w.d_inverse_) {
    fail(ErrorKind::Inconsistency, "sigma_tilde^3(theta) != d*theta*d^-1");
  }
  if (aut.apply(u, 3) != w.d_ * u * w.d_inverse_) {
    fail(ErrorKind::Inconsistency, "sigma_tilde^3(u) != d*u*d^-1");
  }
  return w;
}

DElem aut_inverse_apply(const OuterAut& aut, const InnerWitness& w, const DElem& a) {
  return aut.apply(w.inverse() * a * w.value(), 2);
}

std::vector<NamedFlag> check_relations(const OuterAut& aut, const InnerWitness& w) {
  std::vector<NamedFlag> out;
  const DElem theta = DElem::theta();
  const DElem u = DElem::u();
  const DElem& th = aut.theta_image();
  const DElem& uu = aut.u_image();

  out.push_back({"u_cubed", uu * uu * uu == DElem::from_k(sigma(two_pi()))});
  out.push_back({"commutation",
                 uu * th == aut.apply(DElem::from_l(phi(LElem::theta()))) * uu});
  out.push_back({"f_sigma", eval_poly_in_d(f_poly(), 1, th) == DElem::zero()});
  out.push_back({"inner_theta",
                 aut.apply(theta, 3) == w.value() * theta * w.inverse()});
  out.push_back({"inner_u", aut.apply(u, 3) == w.value() * u * w.inverse()});
  out.push_back({"d_fixed", aut.apply(w.value()) == w.value()});
  out.push_back({"norm_lambda",
                 norm_l_to_k(aut.lambda()) == sigma(k_pi()) * k_pi().inverse()});
  return out;
}

const DElem& builtin_theta_image() {
  static const DElem v = d_from_table(kThetaNum, kThetaDen);
  return v;
}

const DElem& builtin_u_image() {
  static const DElem v(LElem::zero(), l_lambda(), LElem::zero());
  return v;
}

const DElem& builtin_inner_d() {
  static const DElem v = d_from_table(kInnerDNum, 1);
  return v;
}

const OuterAut& builtin_aut() {
  static const OuterAut aut =
      OuterAut::checked(builtin_theta_image(), builtin_u_image());
  return aut;
}

const InnerWitness& builtin_witness() {
  static const InnerWitness w = InnerWitness::checked(builtin_aut(), builtin_inner_d());
  return w;
}

}  // namespace skv
