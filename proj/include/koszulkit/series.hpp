#pragma once

// Exact univariate arithmetic in z over the rationals: polynomials,
// truncated power series and rational functions with invertible
// denominators. Nothing here touches floating point.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace koszulkit {

using Rational = mpq_class;

/// Polynomial in z with rational coefficients, index = exponent.
/// Trailing zeros are never stored, so the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<long> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int exponent);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Rational coefficient(int k) const;
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; throws on division by zero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  /// Monic gcd (zero only when both inputs are zero).
  static Polynomial gcd(Polynomial a, Polynomial b);

  Polynomial substitute_negated() const;  // p(-z)
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Coefficients 0..D of a power series.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int max_degree);
  explicit TruncatedSeries(std::vector<Rational> coefficients);
  TruncatedSeries(std::initializer_list<long> coefficients);

  int max_degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  Rational& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const;
  TruncatedSeries truncated(int max_degree) const;
  TruncatedSeries substitute_negated() const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  /// Product truncated at the smaller of the two degrees.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

  /// "[1,2,4]"
  std::string to_string() const;
  /// ["1","2","1/2"]
  std::string to_json() const;

 private:
  std::vector<Rational> coeffs_;
};

/// numerator / denominator, reduced, with denominator(0) == 1.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(1)) {}
  RationalFunction(const Polynomial& numerator);  // NOLINT(google-explicit-constructor)
  RationalFunction(const Polynomial& numerator, const Polynomial& denominator);

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  TruncatedSeries expand(int max_degree) const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  /// Requires b's numerator to have nonzero constant term.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "(1 - 3*z + 2*z^2)/(1 - z)"
  std::string to_string() const;
  static RationalFunction parse(std::string_view text);

 private:
  Polynomial num_;
  Polynomial den_;
};

TruncatedSeries ratfunc_expand(const RationalFunction& f, int max_degree);
bool series_match(const TruncatedSeries& s, const RationalFunction& f);

Polynomial parse_polynomial(std::string_view text);

}  // namespace koszulkit

namespace koszulkit {

/// Solves A h = b over Q(z). Pivots must have a nonzero constant term
/// somewhere in each column (true whenever A(0) is invertible); otherwise
/// throws SingularSystem.
std::vector<RationalFunction> solve_linear_system(std::vector<std::vector<RationalFunction>> a,
                                                  std::vector<RationalFunction> b);

}  // namespace koszulkit
