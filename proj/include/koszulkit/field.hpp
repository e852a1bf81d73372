#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

namespace koszulkit {

class Scalar;

/// The ground field: the rationals or F_p for a prime p < 2^31.
class FieldSpec {
 public:
  FieldSpec() = default;  // rationals
  static FieldSpec rationals() { return FieldSpec(); }
  /// Throws InvalidArgument unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);

  bool is_prime() const noexcept { return modulus_ != 0; }
  std::uint32_t characteristic() const noexcept { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;
  /// Throws InvalidArgument if the denominator vanishes mod p.
  Scalar from_rational(const mpq_class& value) const;
  /// Prime fields only: wraps a residue already reduced below p.
  Scalar from_residue(std::uint64_t r) const;

  std::string to_string() const;
  friend bool operator==(const FieldSpec& a, const FieldSpec& b) { return a.modulus_ == b.modulus_; }

 private:
  friend class Scalar;
  std::uint32_t modulus_ = 0;
};

/// Element of a FieldSpec. Prime-field values are residues in [0, p);
/// rational values are GMP rationals.
class Scalar {
 public:
  Scalar() = default;  // rational zero

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws InvalidArgument on zero.
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Rational value; residues come back as integers in [0, p).
  mpq_class to_rational() const;
  /// Residue, or the rational rendered canonically.
  std::string to_string() const;
  /// Signed rendering for prime fields: residues above p/2 print negative.
  std::string to_signed_string() const;
  bool prints_negative() const;
  /// Prime fields only.
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }

 private:
  friend class FieldSpec;
  Scalar(std::uint32_t modulus, std::uint64_t residue) : modulus_(modulus), value_(residue) {}
  void check_same(const Scalar& o) const;

  std::uint32_t modulus_ = 0;
  std::variant<std::uint64_t, mpq_class> value_{mpq_class(0)};
};

bool is_prime_number(std::uint64_t n);

}  // namespace koszulkit
