#include "koszulkit/freealg.hpp"

#include <algorithm>
#include <numeric>

#include "koszulkit/error.hpp"

namespace koszulkit {

Word Word::sub(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Word Word::reversed() const { return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend())); }

std::size_t Word::find(const Word& factor, std::size_t from) const {
  if (factor.size() > size()) return npos;
  auto it = std::search(letters_.begin() + static_cast<std::ptrdiff_t>(from), letters_.end(),
                        factor.letters_.begin(), factor.letters_.end());
  return it == letters_.end() && !factor.empty() ? npos : static_cast<std::size_t>(it - letters_.begin());
}

bool Word::starts_with(const Word& w) const {
  return w.size() <= size() && std::equal(w.letters_.begin(), w.letters_.end(), letters_.begin());
}

bool Word::ends_with(const Word& w) const {
  return w.size() <= size() &&
         std::equal(w.letters_.begin(), w.letters_.end(), letters_.end() - static_cast<std::ptrdiff_t>(w.size()));
}

Word& Word::operator*=(const Word& o) {
  letters_.insert(letters_.end(), o.letters_.begin(), o.letters_.end());
  return *this;
}

Word Word::operator*(Letter l) const {
  Word w = *this;
  w.letters_.push_back(l);
  return w;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  return a.letters_ <=> b.letters_;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Letter l : w.letters()) {
    h ^= l + 1;
    h *= 1099511628211ULL;
  }
  return h;
}

GenOrder::GenOrder(std::vector<Letter> ascending) : ascending_(std::move(ascending)) {
  rank_.assign(ascending_.size(), 0);
  std::vector<bool> seen(ascending_.size(), false);
  for (std::size_t k = 0; k < ascending_.size(); ++k) {
    Letter g = ascending_[k];
    if (g >= ascending_.size() || seen[g])
      throw Error(ErrorCode::InvalidArgument, "generator order is not a permutation");
    seen[g] = true;
    rank_[g] = static_cast<Letter>(k);
  }
}

GenOrder GenOrder::identity(std::size_t n) {
  std::vector<Letter> v(n);
  std::iota(v.begin(), v.end(), Letter{0});
  return GenOrder(std::move(v));
}

GenOrder GenOrder::reversed() const {
  return GenOrder(std::vector<Letter>(ascending_.rbegin(), ascending_.rend()));
}

Word GenOrder::to_ranks(const Word& w) const {
  std::vector<Letter> v(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) v[i] = rank_.at(w[i]);
  return Word(std::move(v));
}

Word GenOrder::from_ranks(const Word& w) const {
  std::vector<Letter> v(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) v[i] = ascending_.at(w[i]);
  return Word(std::move(v));
}

Cmp word_compare(const Word& u, const Word& v, const GenOrder& ord) {
  if (u.size() != v.size()) return u.size() < v.size() ? Cmp::LT : Cmp::GT;
  for (std::size_t i = 0; i < u.size(); ++i) {
    Letter a = ord.rank(u[i]);
    Letter b = ord.rank(v[i]);
    if (a != b) return a < b ? Cmp::LT : Cmp::GT;
  }
  return Cmp::EQ;
}

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

namespace {

// Gauss-Jordan on [a | b]; returns rank of a, b transformed alongside.
std::size_t gauss_jordan(Matrix& a, Matrix* b) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(rank, j));
    if (b)
      for (std::size_t j = 0; j < b->cols(); ++j) std::swap((*b)(piv, j), (*b)(rank, j));
    Scalar inv = a(rank, col).inverse();
    for (std::size_t j = 0; j < a.cols(); ++j) a(rank, j) *= inv;
    if (b)
      for (std::size_t j = 0; j < b->cols(); ++j) (*b)(rank, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == rank || a(i, col).is_zero()) continue;
      Scalar f = a(i, col);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(rank, j);
      if (b)
        for (std::size_t j = 0; j < b->cols(); ++j) (*b)(i, j) -= f * (*b)(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t Matrix::rank() const {
  Matrix a = *this;
  return gauss_jordan(a, nullptr);
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw Error(ErrorCode::SingularMatrix, "non-square matrix");
  Matrix a = *this;
  Matrix b = identity(field_, rows_);
  if (gauss_jordan(a, &b) != rows_) throw Error(ErrorCode::SingularMatrix, "matrix is not invertible");
  return b;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  Matrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

NcPoly NcPoly::monomial(FieldSpec field, const Word& w, const Scalar& c) {
  NcPoly p(field);
  p.add_term(w, c);
  return p;
}

Scalar NcPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? field_.zero() : it->second;
}

void NcPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  if (c.field() != field_) throw Error(ErrorCode::FieldMismatch, "coefficient from a different field");
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool NcPoly::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.size() == terms_.rbegin()->first.size();
}

int NcPoly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }
int NcPoly::low_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

void NcPoly::check_field(const NcPoly& o) const {
  if (!(field_ == o.field_)) throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
}

NcPoly NcPoly::operator-() const {
  NcPoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  check_field(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  check_field(o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  a.check_field(b);
  NcPoly r(a.field_);
  for (const auto& [u, c] : a.terms_)
    for (const auto& [v, d] : b.terms_) r.add_term(u * v, c * d);
  return r;
}

NcPoly operator*(const Scalar& c, const NcPoly& a) {
  NcPoly r(a.field_);
  for (const auto& [w, d] : a.terms_) r.add_term(w, c * d);
  return r;
}

NcPoly NcPoly::sandwich(const Word& left, const Word& right) const {
  NcPoly r(field_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(left * w * right, c);
  return r;
}

NcPoly NcPoly::map_words(const std::function<Word(const Word&)>& f) const {
  NcPoly r(field_);
  for (const auto& [w, c] : terms_) r.add_term(f(w), c);
  return r;
}

NcPoly poly_mul(const NcPoly& f, const NcPoly& g) { return f * g; }

std::pair<Word, Scalar> leading_monomial(const NcPoly& f, const GenOrder& ord) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "leading monomial of zero");
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it)
    if (word_compare(it->first, best->first, ord) == Cmp::GT) best = it;
  return {best->first, best->second};
}

NcPoly apply_linear_change(const NcPoly& f, const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::SingularMatrix, "non-square substitution matrix");
  if (m.rank() != m.rows()) throw Error(ErrorCode::SingularMatrix, "substitution matrix is not invertible");
  const FieldSpec& field = f.field();
  NcPoly result(field);
  for (const auto& [w, c] : f.terms()) {
    NcPoly expanded = NcPoly::constant(field, c);
    for (Letter l : w.letters()) {
      if (l >= m.rows()) throw Error(ErrorCode::InvalidArgument, "letter outside the substitution matrix");
      NcPoly image(field);
      for (std::size_t j = 0; j < m.cols(); ++j) image.add_term(Word{static_cast<Letter>(j)}, m(l, j));
      expanded = expanded * image;
    }
    result += expanded;
  }
  return result;
}

}  // namespace koszulkit
