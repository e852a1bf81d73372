#pragma once

// Sparse exact linear algebra over a FieldSpec: vectors, reduced
// row-echelon subspaces and kernels. Every graded component in the
// library is a subspace handled through these types.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "koszulkit/field.hpp"

namespace koszulkit {

/// (index, value) pairs, strictly increasing indices, no zero values.
using SparseVector = std::vector<std::pair<std::uint32_t, Scalar>>;

/// a + c * b
SparseVector axpy(const SparseVector& a, const Scalar& c, const SparseVector& b);
SparseVector scaled(const SparseVector& v, const Scalar& c);
SparseVector unit_vector(const FieldSpec& field, std::uint32_t index);
/// Value at an index (zero of `field` when absent).
Scalar entry(const SparseVector& v, std::uint32_t index, const FieldSpec& field);

/// Subspace of field^dimension kept in reduced row-echelon form, pivots
/// being the smallest indices of the rows. Two subspaces are equal iff
/// their row lists are equal.
class EchelonBasis {
 public:
  EchelonBasis() = default;
  EchelonBasis(FieldSpec field, std::size_t dimension);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t rank() const noexcept { return field_.is_prime() ? fast_.size() : rows_.size(); }

  SparseVector reduce(SparseVector v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  /// Returns true when v was independent of the current rows.
  bool insert(const SparseVector& v);
  bool contains_all(const EchelonBasis& other) const;

  std::vector<SparseVector> rows() const;
  std::vector<std::uint32_t> pivots() const;

  friend bool operator==(const EchelonBasis& a, const EchelonBasis& b) {
    return a.dimension_ == b.dimension_ && a.rows_ == b.rows_ && a.fast_ == b.fast_;
  }

 private:
  // Prime fields keep rows as plain residues.
  using FastRow = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
  FastRow fast_reduce(const SparseVector& v) const;
  SparseVector to_sparse(const FastRow& r) const;

  FieldSpec field_;
  std::size_t dimension_ = 0;
  std::map<std::uint32_t, SparseVector> rows_;  // pivot -> monic row (rationals)
  std::map<std::uint32_t, FastRow> fast_;       // pivot -> monic row (prime fields)
};

/// Basis of {c : sum_i c_i images[i] = 0}, in coordinates of the domain.
std::vector<SparseVector> kernel(const FieldSpec& field, const std::vector<SparseVector>& images);

/// Rank of the span of `vectors`.
std::size_t rank_of(const FieldSpec& field, std::size_t dimension, const std::vector<SparseVector>& vectors);

}  // namespace koszulkit

namespace koszulkit {

/// Dense scratch vector for summing many sparse vectors of one dimension.
class Accumulator {
 public:
  Accumulator(const FieldSpec& field, std::size_t dimension);
  void add(const SparseVector& v, const Scalar& c);
  void add(std::uint32_t index, const Scalar& c);
  /// Returns the sum and resets to zero.
  SparseVector take();

 private:
  FieldSpec field_;
  std::vector<Scalar> values_;
  std::vector<char> touched_;
  std::vector<std::uint32_t> indices_;
};

}  // namespace koszulkit
