#pragma once

// Words, degree-lexicographic orders and noncommutative polynomials over
// a FieldSpec. Generators are plain indices; names live in presentations.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "koszulkit/field.hpp"

namespace koszulkit {

using Letter = std::uint16_t;

/// A noncommutative monomial: a finite sequence of generator indices.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const noexcept { return letters_.size(); }
  int degree() const noexcept { return static_cast<int>(letters_.size()); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter back() const { return letters_.back(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::span<const Letter> view() const noexcept { return letters_; }

  Word sub(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return sub(0, len); }
  Word suffix(std::size_t len) const { return sub(size() - len, len); }
  Word reversed() const;
  /// Leftmost start position of `factor`, or npos.
  std::size_t find(const Word& factor, std::size_t from = 0) const;
  bool contains(const Word& factor) const { return find(factor) != npos; }
  bool starts_with(const Word& w) const;
  bool ends_with(const Word& w) const;

  Word& operator*=(const Word& o);
  friend Word operator*(Word a, const Word& b) { return a *= b; }
  Word operator*(Letter l) const;

  /// Degree first, then lexicographic on raw letter values.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) = default;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

enum class Cmp { LT, EQ, GT };

/// A linear order on generators: ascending()[k] is the k-th smallest.
class GenOrder {
 public:
  GenOrder() = default;
  /// Throws InvalidArgument unless `ascending` is a permutation of 0..n-1.
  explicit GenOrder(std::vector<Letter> ascending);
  static GenOrder identity(std::size_t n);

  std::size_t size() const noexcept { return ascending_.size(); }
  const std::vector<Letter>& ascending() const noexcept { return ascending_; }
  /// Position of generator g in the order (0 = smallest).
  Letter rank(Letter g) const { return rank_[g]; }
  GenOrder reversed() const;

  /// Relabel a word so that raw comparison equals this order.
  Word to_ranks(const Word& w) const;
  Word from_ranks(const Word& w) const;

  friend bool operator==(const GenOrder& a, const GenOrder& b) { return a.ascending_ == b.ascending_; }

 private:
  std::vector<Letter> ascending_;
  std::vector<Letter> rank_;
};

/// Deglex comparison of words under `ord`.
Cmp word_compare(const Word& u, const Word& v, const GenOrder& ord);

/// Dense square matrix over a field, used for linear changes of generators.
class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);
  static Matrix identity(FieldSpec field, std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldSpec& field() const noexcept { return field_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::size_t rank() const;
  /// Throws SingularMatrix.
  Matrix inverse() const;
  Matrix transpose() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Noncommutative polynomial: a finite map Word -> nonzero scalar.
class NcPoly {
 public:
  using Terms = std::map<Word, Scalar>;

  explicit NcPoly(FieldSpec field = {}) : field_(field) {}
  static NcPoly monomial(FieldSpec field, const Word& w, const Scalar& c);
  static NcPoly monomial(FieldSpec field, const Word& w) { return monomial(field, w, field.one()); }
  static NcPoly constant(FieldSpec field, const Scalar& c) { return monomial(field, Word{}, c); }

  const FieldSpec& field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Scalar coefficient(const Word& w) const;

  /// Adds c*w, dropping the term if it cancels.
  void add_term(const Word& w, const Scalar& c);

  bool is_homogeneous() const;
  /// Degree of the longest word; -1 for zero.
  int degree() const;
  /// Smallest word length; -1 for zero.
  int low_degree() const;
  bool is_monomial() const { return terms_.size() == 1; }

  NcPoly operator-() const;
  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  friend NcPoly operator*(const Scalar& c, const NcPoly& a);
  friend bool operator==(const NcPoly& a, const NcPoly& b) = default;

  /// u * this * v for words u, v.
  NcPoly sandwich(const Word& left, const Word& right) const;
  /// Applies a letter map to every word (must be injective on letters used).
  NcPoly map_words(const std::function<Word(const Word&)>& f) const;

 private:
  void check_field(const NcPoly& o) const;

  FieldSpec field_;
  Terms terms_;
};

NcPoly poly_mul(const NcPoly& f, const NcPoly& g);

/// Deglex-greatest word and its coefficient. Throws ZeroPolynomial.
std::pair<Word, Scalar> leading_monomial(const NcPoly& f, const GenOrder& ord);

/// Substitutes x_i -> sum_j M(i,j) x_j. Throws SingularMatrix.
NcPoly apply_linear_change(const NcPoly& f, const Matrix& m);

}  // namespace koszulkit
