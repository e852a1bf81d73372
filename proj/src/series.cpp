#include "koszulkit/series.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "koszulkit/error.hpp"

namespace koszulkit {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

Polynomial::Polynomial(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coeffs_.emplace_back(c);
  normalize();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, int exponent) {
  std::vector<Rational> v(static_cast<std::size_t>(exponent) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  std::vector<Rational> v = a.coeffs_;
  for (auto& x : v) x *= c;
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs_;
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  const Rational& lead = b.coeffs_.back();
  for (int k = a.degree(); k >= db; --k) {
    Rational c = rem[static_cast<std::size_t>(k)] / lead;
    if (sgn(c) == 0) continue;
    quot[static_cast<std::size_t>(k - db)] = c;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k - db + i)] -= c * b.coeffs_[static_cast<std::size_t>(i)];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  Rational lead = a.coeffs_.back();
  for (auto& c : a.coeffs_) c /= lead;
  return a;
}

Polynomial Polynomial::substitute_negated() const {
  Polynomial r = *this;
  for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << "z";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

TruncatedSeries::TruncatedSeries(int max_degree) {
  if (max_degree < 0) throw Error(ErrorCode::InvalidArgument, "negative truncation degree");
  coeffs_.resize(static_cast<std::size_t>(max_degree) + 1);
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "empty truncated series");
}

TruncatedSeries::TruncatedSeries(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coeffs_.emplace_back(c);
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "empty truncated series");
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

TruncatedSeries TruncatedSeries::truncated(int max_degree) const {
  TruncatedSeries r(max_degree);
  for (int k = 0; k <= std::min(max_degree, this->max_degree()); ++k) r[k] = (*this)[k];
  return r;
}

TruncatedSeries TruncatedSeries::substitute_negated() const {
  TruncatedSeries r = *this;
  for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.max_degree(), b.max_degree()));
  for (int k = 0; k <= r.max_degree(); ++k) r[k] = a[k] + b[k];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.max_degree(), b.max_degree()));
  for (int k = 0; k <= r.max_degree(); ++k) r[k] = a[k] - b[k];
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.max_degree(), b.max_degree()));
  for (int k = 0; k <= r.max_degree(); ++k)
    for (int i = 0; i <= k; ++i) r[k] += a[i] * b[k - i];
  return r;
}

std::string TruncatedSeries::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ",";
    s += coeffs_[i].get_str();
  }
  return s + "]";
}

std::string TruncatedSeries::to_json() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ",";
    s += "\"" + coeffs_[i].get_str() + "\"";
  }
  return s + "]";
}

RationalFunction::RationalFunction(const Polynomial& numerator)
    : num_(numerator), den_(Polynomial::constant(1)) {}

RationalFunction::RationalFunction(const Polynomial& numerator, const Polynomial& denominator) {
  if (denominator.is_zero()) throw Error(ErrorCode::NonInvertibleDenominator, "zero denominator");
  if (numerator.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  Polynomial g = Polynomial::gcd(numerator, denominator);
  num_ = Polynomial::divmod(numerator, g).first;
  den_ = Polynomial::divmod(denominator, g).first;
  Rational c0 = den_.coefficient(0);
  if (sgn(c0) == 0)
    throw Error(ErrorCode::NonInvertibleDenominator,
                "denominator " + den_.to_string() + " has zero constant term");
  Rational inv = 1 / c0;
  num_ = inv * num_;
  den_ = inv * den_;
}

TruncatedSeries RationalFunction::expand(int max_degree) const {
  TruncatedSeries s(max_degree);
  const Rational d0 = den_.coefficient(0);
  for (int k = 0; k <= max_degree; ++k) {
    Rational acc = num_.coefficient(k);
    for (int i = 1; i <= std::min(k, den_.degree()); ++i) acc -= den_.coefficient(i) * s[k - i];
    s[k] = acc / d0;
  }
  return s;
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(ErrorCode::NonInvertibleDenominator, "division by zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::to_string() const {
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

class ZParser {
 public:
  explicit ZParser(std::string_view text) : text_(text) {}

  Polynomial polynomial() {
    skip();
    Polynomial result;
    bool first = true;
    while (pos_ < text_.size() && text_[pos_] != ')') {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
      } else if (!first) {
        fail("'+' or '-'");
      }
      first = false;
      skip();
      Rational coeff = 1;
      bool have_coeff = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = number();
        have_coeff = true;
        skip();
        if (peek() == '/') {
          get();
          skip();
          Rational den = number();
          if (sgn(den) == 0) fail("nonzero denominator");
          coeff /= den;
          skip();
        }
      }
      int exponent = 0;
      if (peek() == '*') {
        get();
        skip();
        if (peek() != 'z') fail("'z'");
      }
      if (peek() == 'z') {
        get();
        exponent = 1;
        skip();
        if (peek() == '^') {
          get();
          skip();
          exponent = static_cast<int>(number().get_num().get_si());
        }
      } else if (!have_coeff) {
        fail("coefficient or 'z'");
      }
      result = result + Polynomial::monomial(sign * coeff, exponent);
      skip();
    }
    return result;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (get() != c) fail(std::string("'") + c + "'");
  }
  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(1, pos_ + 1, what); }

 private:
  Rational number() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("digits");
    return Rational(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
  ZParser p(text);
  Polynomial result = p.polynomial();
  if (!p.at_end()) p.fail("end of input");
  return result;
}

RationalFunction RationalFunction::parse(std::string_view text) {
  ZParser p(text);
  p.skip();
  if (p.peek() != '(') {
    Polynomial num = p.polynomial();
    if (!p.at_end()) p.fail("end of input");
    return RationalFunction(num);
  }
  p.expect('(');
  Polynomial num = p.polynomial();
  p.expect(')');
  p.expect('/');
  p.expect('(');
  Polynomial den = p.polynomial();
  p.expect(')');
  if (!p.at_end()) p.fail("end of input");
  return RationalFunction(num, den);
}

TruncatedSeries ratfunc_expand(const RationalFunction& f, int max_degree) { return f.expand(max_degree); }

bool series_match(const TruncatedSeries& s, const RationalFunction& f) {
  return f.expand(s.max_degree()) == s;
}

}  // namespace koszulkit

namespace koszulkit {

std::vector<RationalFunction> solve_linear_system(std::vector<std::vector<RationalFunction>> a,
                                                  std::vector<RationalFunction> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw Error(ErrorCode::InvalidArgument, "system size mismatch");
  for (const auto& row : a)
    if (row.size() != n) throw Error(ErrorCode::InvalidArgument, "system matrix must be square");

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t r = k; r < n; ++r) {
      if (a[r][k].numerator().coefficient(0) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == n) throw Error(ErrorCode::SingularSystem, "no invertible pivot in column " + std::to_string(k));
    std::swap(a[k], a[pivot]);
    std::swap(b[k], b[pivot]);
    const RationalFunction inv = RationalFunction(Polynomial{1}) / a[k][k];
    for (std::size_t c = k; c < n; ++c) a[k][c] = a[k][c] * inv;
    b[k] = b[k] * inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k || a[r][k].is_zero()) continue;
      const RationalFunction f = a[r][k];
      for (std::size_t c = k; c < n; ++c)
        if (!a[k][c].is_zero()) a[r][c] = a[r][c] - f * a[k][c];
      b[r] = b[r] - f * b[k];
    }
  }
  return b;
}

}  // namespace koszulkit
