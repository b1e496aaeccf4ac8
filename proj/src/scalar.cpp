#include "homhopf/scalar.hpp"

#include <cctype>

namespace homhopf {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  // keeps products below 2^128 and residues printable as int64
  if (p >= (std::uint64_t{1} << 62)) throw std::invalid_argument("modulus too large");
  return Field{p};
}

Scalar Field::zero() const {
  Scalar s;
  s.p_ = modulus_;
  return s;
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
  Scalar s = zero();
  if (is_rational()) {
    s.q_ = mpq_class(mpz_class(static_cast<long>(v)));
  } else {
    auto m = static_cast<std::int64_t>(modulus_);
    std::int64_t r = v % m;
    if (r < 0) r += m;
    s.r_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

Scalar Field::from_ratio(std::int64_t num, std::int64_t den) const {
  return from_int(num) / from_int(den);
}

Scalar Field::parse(std::string_view text) const {
  std::string_view t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  if (t.empty()) throw std::invalid_argument("empty scalar");

  if (!is_rational()) {
    if (!all_digits(t)) throw std::invalid_argument("GF(p) scalar must be a decimal residue: '" + std::string(text) + "'");
    mpz_class v(std::string(t), 10);
    if (v >= mpz_class(std::to_string(modulus_)))
      throw std::invalid_argument("residue out of range [0," + std::to_string(modulus_) + "): '" + std::string(text) + "'");
    Scalar s = zero();
    s.r_ = std::stoull(std::string(t));
    return s;
  }

  std::string_view num = t, den;
  if (auto slash = t.find('/'); slash != std::string_view::npos) {
    num = t.substr(0, slash);
    den = t.substr(slash + 1);
    if (!all_digits(den)) throw std::invalid_argument("bad denominator in '" + std::string(text) + "'");
  }
  std::string_view digits = num;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");

  Scalar s = zero();
  std::string ns(num);
  if (!ns.empty() && ns.front() == '+') ns.erase(0, 1);
  mpz_class n(ns, 10);
  mpz_class d(1);
  if (!den.empty()) d = mpz_class(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  s.q_ = mpq_class(n, d);
  s.q_.canonicalize();
  return s;
}

std::string Field::describe() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(modulus_) + ")";
}

Field Scalar::field() const { return Field{p_}; }

bool Scalar::is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

void Scalar::require_same_field(const Scalar& o) const {
  if (p_ != o.p_) throw FieldMismatch("scalars from different fields");
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_ == 0)
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : p_ - r_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (p_ == 0) {
    q_ += o.q_;
  } else {
    r_ += o.r_;
    if (r_ >= p_) r_ -= p_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  if (p_ == 0)
    q_ -= o.q_;
  else
    r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + (p_ - o.r_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (p_ == 0)
    q_ *= o.q_;
  else
    r_ = mul_mod(r_, o.r_, p_);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar s = *this;
  if (p_ == 0)
    s.q_ = 1 / q_;
  else
    s.r_ = pow_mod(r_, p_ - 2, p_);
  return s;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const {
  if (p_ != 0) return std::to_string(r_);
  return q_.get_str(10);
}

}  // namespace homhopf
