#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <string_view>

namespace homhopf {

class Scalar;

/// The ground field: either the rationals or a prime field GF(p).
class Field {
public:
  static Field rational() { return Field{0}; }
  /// Throws std::invalid_argument unless p is prime.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return modulus_ == 0; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t characteristic() const { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_ratio(std::int64_t num, std::int64_t den) const;

  /// Parses "a", "-a", "a/b" (rational) or a decimal residue in [0,p).
  /// Floating-point spellings are rejected.
  Scalar parse(std::string_view text) const;

  std::string describe() const;

  friend bool operator==(const Field&, const Field&) = default;

private:
  friend class Scalar;
  explicit Field(std::uint64_t p) : modulus_(p) {}
  std::uint64_t modulus_;
};

/// Thrown when two scalars from different fields meet.
struct FieldMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

/// Exact field element. Rationals are always stored reduced (GMP keeps
/// mpq_class canonical); residues always satisfy 0 <= r < p.
class Scalar {
public:
  Scalar() = default;

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws std::domain_error on division by zero.
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Canonical text: "a" or "a/b" for rationals, the residue for GF(p).
  std::string to_string() const;

  const mpq_class& rational_value() const { return q_; }
  std::uint64_t residue() const { return r_; }

private:
  friend class Field;
  void require_same_field(const Scalar& o) const;

  std::uint64_t p_ = 0;  // 0 means rational
  std::uint64_t r_ = 0;
  mpq_class q_;
};

}  // namespace homhopf
