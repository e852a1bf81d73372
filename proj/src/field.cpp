#include "koszulkit/field.hpp"

#include "koszulkit/error.hpp"

namespace koszulkit {

namespace {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = result * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime_number(p))
    throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not a prime below 2^31");
  FieldSpec f;
  f.modulus_ = static_cast<std::uint32_t>(p);
  return f;
}

Scalar FieldSpec::zero() const { return from_int(0); }
Scalar FieldSpec::one() const { return from_int(1); }

Scalar FieldSpec::from_int(long value) const {
  if (modulus_) {
    long r = value % static_cast<long>(modulus_);
    if (r < 0) r += modulus_;
    return Scalar(modulus_, static_cast<std::uint64_t>(r));
  }
  Scalar s;
  s.value_ = mpq_class(value);
  return s;
}

Scalar FieldSpec::from_residue(std::uint64_t r) const { return Scalar(modulus_, r); }

Scalar FieldSpec::from_rational(const mpq_class& value) const {
  if (!modulus_) {
    Scalar s;
    s.value_ = value;
    return s;
  }
  mpz_class m(modulus_);
  mpz_class num = value.get_num() % m;
  mpz_class den = value.get_den() % m;
  if (num < 0) num += m;
  if (den == 0)
    throw Error(ErrorCode::InvalidArgument,
                "denominator of " + value.get_str() + " vanishes mod " + std::to_string(modulus_));
  Scalar n = from_int(static_cast<long>(num.get_ui()));
  Scalar d = from_int(static_cast<long>(den.get_ui()));
  return n / d;
}

std::string FieldSpec::to_string() const {
  return modulus_ ? "prime " + std::to_string(modulus_) : "rational";
}

FieldSpec Scalar::field() const {
  FieldSpec f;
  f.modulus_ = modulus_;  // validated when the scalar was made
  return f;
}

void Scalar::check_same(const Scalar& o) const {
  if (modulus_ != o.modulus_)
    throw Error(ErrorCode::FieldMismatch, "scalars from different fields");
}

bool Scalar::is_zero() const {
  if (modulus_) return std::get<std::uint64_t>(value_) == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (modulus_) return std::get<std::uint64_t>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (modulus_) {
    auto& v = std::get<std::uint64_t>(r.value_);
    v = v ? modulus_ - v : 0;
  } else {
    auto& q = std::get<mpq_class>(r.value_);
    q = -q;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (modulus_) {
    auto& v = std::get<std::uint64_t>(value_);
    v += std::get<std::uint64_t>(o.value_);
    if (v >= modulus_) v -= modulus_;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (modulus_) {
    auto& v = std::get<std::uint64_t>(value_);
    std::uint64_t w = std::get<std::uint64_t>(o.value_);
    v = v >= w ? v - w : v + modulus_ - w;
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (modulus_) {
    auto& v = std::get<std::uint64_t>(value_);
    v = v * std::get<std::uint64_t>(o.value_) % modulus_;
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
  Scalar r = *this;
  if (modulus_) {
    r.value_ = mod_pow(std::get<std::uint64_t>(value_), modulus_ - 2, modulus_);
  } else {
    r.value_ = mpq_class(1) / std::get<mpq_class>(value_);
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.modulus_ == b.modulus_ && a.value_ == b.value_;
}

mpq_class Scalar::to_rational() const {
  if (modulus_) return mpq_class(static_cast<unsigned long>(std::get<std::uint64_t>(value_)));
  return std::get<mpq_class>(value_);
}

std::string Scalar::to_string() const {
  if (modulus_) return std::to_string(std::get<std::uint64_t>(value_));
  return std::get<mpq_class>(value_).get_str();
}

bool Scalar::prints_negative() const {
  if (modulus_) return std::get<std::uint64_t>(value_) > modulus_ / 2;
  return sgn(std::get<mpq_class>(value_)) < 0;
}

std::string Scalar::to_signed_string() const {
  if (modulus_ && prints_negative())
    return "-" + std::to_string(modulus_ - std::get<std::uint64_t>(value_));
  return to_string();
}

}  // namespace koszulkit
