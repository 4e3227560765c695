#include "residue.hpp"

#include <numeric>

namespace skv {

namespace {

bool small_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

int mod_p(long v, int p) {
  long r = v % p;
  if (r < 0) r += p;
  return static_cast<int>(r);
}

int rational_mod_p(const Rational& q, int p) {
  const int den = static_cast<int>(mpz_class(q.get_den() % p).get_si());
  if (den == 0) {
    fail(ErrorKind::Precondition,
         "denominator of " + to_string(q) + " not coprime to " + std::to_string(p));
  }
  const int num = mod_p(mpz_class(q.get_num() % p).get_si(), p);
  // den^-1 mod p by scan; p <= 7 in every caller.
  for (int inv = 1; inv < p; ++inv) {
    if (mod_p(static_cast<long>(den) * inv, p) == 1) return mod_p(static_cast<long>(num) * inv, p);
  }
  fail(ErrorKind::Precondition, "no inverse mod " + std::to_string(p));
}

}  // namespace

FiniteField::FiniteField(int p) : p_(p), degree_(1), size_(p), modulus_{0, 1, 0, 0} {
  if (!small_prime(p)) {
    fail(ErrorKind::Precondition, "characteristic " + std::to_string(p) + " is not prime");
  }
}

FiniteField::FiniteField(int p, const std::vector<int>& modulus)
    : p_(p), degree_(static_cast<int>(modulus.size()) - 1), modulus_{0, 0, 0, 0} {
  if (!small_prime(p)) {
    fail(ErrorKind::Precondition, "characteristic " + std::to_string(p) + " is not prime");
  }
  if (degree_ < 2 || degree_ > 3) {
    fail(ErrorKind::Precondition, "extension degree must be 2 or 3");
  }
  if (modulus.back() != 1) {
    fail(ErrorKind::Precondition, "modulus must be monic");
  }
  size_ = 1;
  for (int i = 0; i < degree_; ++i) size_ *= p;
  for (std::size_t i = 0; i < modulus.size(); ++i) {
    modulus_[i] = mod_p(modulus[i], p);
  }
  // Degree 2 or 3 is irreducible exactly when it has no root in F_p.
  for (int r = 0; r < p; ++r) {
    long v = 0;
    for (int i = degree_; i >= 0; --i) {
      v = mod_p(v * r + modulus_[static_cast<std::size_t>(i)], p);
    }
    if (v == 0) {
      fail(ErrorKind::Precondition, "modulus is reducible: root " + std::to_string(r));
    }
  }
}

FqElem::FqElem(FiniteField field, long constant)
    : field_(std::move(field)), c_{mod_p(constant, field_.p()), 0, 0} {}

FqElem::FqElem(FiniteField field, std::array<int, 3> coeffs)
    : field_(std::move(field)), c_{0, 0, 0} {
  for (int i = 0; i < 3; ++i) {
    if (i >= field_.degree() && coeffs[static_cast<std::size_t>(i)] % field_.p() != 0) {
      fail(ErrorKind::Precondition, "coefficient beyond field degree");
    }
    c_[static_cast<std::size_t>(i)] = mod_p(coeffs[static_cast<std::size_t>(i)], field_.p());
  }
}

FqElem FqElem::gen(const FiniteField& field) {
  if (field.degree() < 2) {
    fail(ErrorKind::Precondition, "prime field has no generator element y");
  }
  return FqElem(field, std::array<int, 3>{0, 1, 0});
}

FqElem FqElem::from_index(const FiniteField& field, long index) {
  std::array<int, 3> c{0, 0, 0};
  for (int i = 0; i < field.degree(); ++i) {
    c[static_cast<std::size_t>(i)] = static_cast<int>(index % field.p());
    index /= field.p();
  }
  return FqElem(field, c);
}

FqElem operator+(const FqElem& a, const FqElem& b) {
  std::array<int, 3> c;
  for (int i = 0; i < 3; ++i) {
    c[static_cast<std::size_t>(i)] =
        mod_p(a.c_[static_cast<std::size_t>(i)] + b.c_[static_cast<std::size_t>(i)], a.field_.p());
  }
  return FqElem(a.field_, c);
}

FqElem operator-(const FqElem& a, const FqElem& b) {
  std::array<int, 3> c;
  for (int i = 0; i < 3; ++i) {
    c[static_cast<std::size_t>(i)] =
        mod_p(a.c_[static_cast<std::size_t>(i)] - b.c_[static_cast<std::size_t>(i)], a.field_.p());
  }
  return FqElem(a.field_, c);
}

FqElem operator-(const FqElem& a) { return FqElem(a.field_, 0) - a; }

FqElem operator*(const FqElem& a, const FqElem& b) {
  const int p = a.field_.p();
  const int deg = a.field_.degree();
  std::array<int, 5> r{0, 0, 0, 0, 0};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      r[static_cast<std::size_t>(i + j)] =
          mod_p(r[static_cast<std::size_t>(i + j)] +
                    a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)],
                p);
    }
  }
  // y^deg = -sum_{t<deg} modulus[t] y^t
  for (int k = 4; k >= deg; --k) {
    const int top = r[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    for (int t = 0; t < deg; ++t) {
      r[static_cast<std::size_t>(k - deg + t)] =
          mod_p(r[static_cast<std::size_t>(k - deg + t)] -
                    top * a.field_.modulus_coeff(t),
                p);
    }
    r[static_cast<std::size_t>(k)] = 0;
  }
  return FqElem(a.field_, std::array<int, 3>{r[0], r[1], r[2]});
}

FqElem FqElem::pow(long e) const {
  if (e < 0) fail(ErrorKind::Precondition, "negative exponent");
  FqElem acc = FqElem::one(field_);
  FqElem base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

FqElem FqElem::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in F_q");
  for (long idx = 1; idx < field_.size(); ++idx) {
    const FqElem candidate = from_index(field_, idx);
    if (*this * candidate == FqElem::one(field_)) return candidate;
  }
  fail(ErrorKind::Inconsistency, "no inverse found in F_q");
}

int FqElem::mult_order() const {
  if (is_zero()) fail(ErrorKind::Precondition, "order of zero");
  FqElem acc = *this;
  int order = 1;
  while (acc != FqElem::one(field_)) {
    acc = acc * *this;
    ++order;
    if (order > field_.size()) {
      fail(ErrorKind::Inconsistency, "runaway multiplicative order");
    }
  }
  return order;
}

std::string FqElem::str() const {
  std::string out;
  for (int i = 0; i < 3; ++i) {
    const int v = c_[static_cast<std::size_t>(i)];
    if (v == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(v);
    } else {
      out += std::to_string(v) + "*y";
      if (i == 2) out += "^2";
    }
  }
  return out.empty() ? "0" : out;
}

CubicPoly<FqElem> reduce_minpoly_mod(int p) {
  const FiniteField f(p);
  return CubicPoly<FqElem>{FqElem(f, 1), FqElem(f, 1), FqElem(f, -2), FqElem(f, -1)};
}

bool cubic_is_irreducible(const CubicPoly<FqElem>& q) {
  if (q.c3.is_zero()) {
    fail(ErrorKind::Precondition, "leading coefficient is zero");
  }
  const FiniteField& field = q.c3.field();
  for (long idx = 0; idx < field.size(); ++idx) {
    if (q.eval(FqElem::from_index(field, idx)).is_zero()) return false;
  }
  return true;
}

FqElem total_ramification_witness_7() {
  const FiniteField f7(7);
  const CubicPoly<FqElem> target = reduce_minpoly_mod(7);
  int found = 0;
  FqElem witness = FqElem::zero(f7);
  for (int r = 0; r < 7; ++r) {
    // (x - r)^3 = x^3 - 3r x^2 + 3r^2 x - r^3
    const FqElem rr(f7, r);
    const FqElem c2 = -(FqElem(f7, 3) * rr);
    const FqElem c1 = FqElem(f7, 3) * rr * rr;
    const FqElem c0 = -(rr * rr * rr);
    if (c2 == target.c2 && c1 == target.c1 && c0 == target.c0) {
      witness = rr;
      ++found;
    }
  }
  if (found != 1) {
    fail(ErrorKind::NoWitness,
         "expected exactly one cube witness mod 7, found " + std::to_string(found));
  }
  return witness;
}

FiniteField residue_field(ResiduePrime which) {
  if (which == ResiduePrime::Two) {
    return FiniteField(2, std::vector<int>{1, 0, 1, 1});  // y^3 + y^2 + 1
  }
  return FiniteField(7);
}

FqElem reduce_k_at(ResiduePrime which, const KElem& a) {
  const FiniteField field = residue_field(which);
  if (which == ResiduePrime::Two) {
    // alpha -> y, coefficient-wise mod 2.
    std::array<int, 3> c;
    for (int i = 0; i < 3; ++i) {
      c[static_cast<std::size_t>(i)] = rational_mod_p(a.coeff(i), 2);
    }
    return FqElem(field, c);
  }
  // alpha -> 2 mod 7.
  long acc = 0;
  long power = 1;
  for (int i = 0; i < 3; ++i) {
    acc += rational_mod_p(a.coeff(i), 7) * power;
    power *= 2;
  }
  return FqElem(field, acc);
}

CubicPoly<FqElem> reduce_f_at_residue(ResiduePrime which) {
  const CubicPoly<KElem> f = f_poly();
  return CubicPoly<FqElem>{reduce_k_at(which, f.c3), reduce_k_at(which, f.c2),
                           reduce_k_at(which, f.c1), reduce_k_at(which, f.c0)};
}

bool mu_in_fq(long n, long q) {
  if (n < 2 || q < 2) {
    fail(ErrorKind::Precondition, "mu_in_fq needs n >= 2 and q >= 2");
  }
  if (std::gcd(n, q) != 1) {
    fail(ErrorKind::Precondition, "mu_in_fq needs gcd(n, q) = 1");
  }
  return (q - 1) % n == 0;
}

FqElem primitive_root_of_unity(const FiniteField& field, int n) {
  if (n < 2 || (field.size() - 1) % n != 0) {
    fail(ErrorKind::Precondition,
         "no primitive " + std::to_string(n) + "-th root in F_" + std::to_string(field.size()));
  }
  for (long idx = 1; idx < field.size(); ++idx) {
    const FqElem candidate = FqElem::from_index(field, idx);
    if (!candidate.is_zero() && candidate.mult_order() == n) return candidate;
  }
  fail(ErrorKind::NoWitness, "cyclic group without element of dividing order");
}

ResidueSeries::ResidueSeries(FiniteField field, std::int64_t start, std::int64_t cutoff)
    : field_(std::move(field)), start_(start), cutoff_(cutoff) {
  if (cutoff_ <= start_) {
    fail(ErrorKind::Precondition, "empty series window");
  }
}

void ResidueSeries::set_coeff(std::int64_t exponent, const FqElem& value) {
  if (exponent < start_ || exponent >= cutoff_) {
    fail(ErrorKind::Precondition, "coefficient outside window");
  }
  if (value.is_zero()) {
    coeffs_.erase(exponent);
  } else {
    coeffs_.insert_or_assign(exponent, value);
  }
}

FqElem ResidueSeries::coeff_at(std::int64_t exponent) const {
  if (exponent >= cutoff_) {
    fail(ErrorKind::InsufficientPrecision,
         "coefficient " + std::to_string(exponent) + " beyond cutoff " +
             std::to_string(cutoff_));
  }
  const auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? FqElem::zero(field_) : it->second;
}

std::int64_t ResidueSeries::valuation() const {
  if (coeffs_.empty()) {
    fail(ErrorKind::Precondition, "valuation of a series that vanishes on its window");
  }
  return coeffs_.begin()->first;
}

ResidueSeries ResidueSeries::apply_zeta(const FqElem& zeta) const {
  const int order = zeta.mult_order();
  ResidueSeries out(field_, start_, cutoff_);
  for (const auto& [e, c] : coeffs_) {
    const long expo = static_cast<long>(((e % order) + order) % order);
    out.set_coeff(e, zeta.pow(expo) * c);
  }
  return out;
}

ResidueSeries ResidueSeries::inverse() const {
  if (coeffs_.empty()) {
    fail(ErrorKind::DivisionByZero, "inverse of zero series");
  }
  const std::int64_t v = valuation();
  const std::int64_t width = cutoff_ - v;
  const FqElem lead_inv = coeff_at(v).inverse();
  ResidueSeries out(field_, -v, -v + width);
  out.set_coeff(-v, lead_inv);
  for (std::int64_t m = 1; m < width; ++m) {
    FqElem acc = FqElem::zero(field_);
    for (std::int64_t t = 1; t <= m; ++t) {
      acc = acc + coeff_at(v + t) * out.coeff_at(-v + m - t);
    }
    out.set_coeff(-v + m, -(lead_inv * acc));
  }
  return out;
}

ResidueSeries operator*(const ResidueSeries& a, const ResidueSeries& b) {
  const std::int64_t start = a.start_ + b.start_;
  const std::int64_t cutoff = std::min(a.start_ + b.cutoff_, b.start_ + a.cutoff_);
  ResidueSeries out(a.field_, start, cutoff);
  for (const auto& [i, ai] : a.coeffs_) {
    for (const auto& [j, bj] : b.coeffs_) {
      if (i + j >= cutoff) continue;
      out.set_coeff(i + j, out.coeff_at(i + j) + ai * bj);
    }
  }
  return out;
}

FqElem tame_delta_residue(const FiniteField& field, int n, const ResidueSeries& a) {
  if (!mu_in_fq(n, field.size())) {
    fail(ErrorKind::Precondition,
         "F_" + std::to_string(field.size()) + " has no primitive " +
             std::to_string(n) + "-th root of unity");
  }
  if (a.is_zero_on_window() || a.valuation() != 1) {
    fail(ErrorKind::Precondition, "uniformizer (valuation exactly 1) required");
  }
  const FqElem zeta = primitive_root_of_unity(field, n);
  const ResidueSeries quotient = a.apply_zeta(zeta) * a.inverse();
  return quotient.coeff_at(0);
}

ResidueSeries random_uniformizer(const FiniteField& field, SplitMix64& rng,
                                 int precision) {
  ResidueSeries out(field, 1, 1 + precision);
  out.set_coeff(1, FqElem::from_index(field, 1 + static_cast<long>(rng.below(
                                                    static_cast<std::uint64_t>(field.size() - 1)))));
  for (int i = 2; i <= precision; ++i) {
    out.set_coeff(i, FqElem::from_index(field, static_cast<long>(rng.below(
                                                   static_cast<std::uint64_t>(field.size())))));
  }
  return out;
}

}  // namespace skv
