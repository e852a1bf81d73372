#include <doctest.h>

#include <random>

#include "koszulkit/linalg.hpp"

using namespace koszulkit;

namespace {

SparseVector dense_to_sparse(const FieldSpec& f, const std::vector<long>& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.emplace_back(static_cast<std::uint32_t>(i), f.from_int(v[i]));
  return out;
}

SparseVector combine(const FieldSpec& f, const std::vector<SparseVector>& rows, const SparseVector& coeffs) {
  SparseVector acc;
  for (const auto& [i, c] : coeffs) acc = axpy(acc, c, rows[i]);
  (void)f;
  return acc;
}

}  // namespace

TEST_CASE("echelon basis basics") {
  FieldSpec q = FieldSpec::rationals();
  EchelonBasis b(q, 4);
  CHECK(b.insert(dense_to_sparse(q, {1, 1, 0, 0})));
  CHECK(b.insert(dense_to_sparse(q, {0, 1, 1, 0})));
  CHECK_FALSE(b.insert(dense_to_sparse(q, {1, 2, 1, 0})));
  CHECK(b.rank() == 2);
  CHECK(b.contains(dense_to_sparse(q, {1, 0, -1, 0})));
  CHECK_FALSE(b.contains(dense_to_sparse(q, {0, 0, 0, 1})));
  EchelonBasis c(q, 4);
  c.insert(dense_to_sparse(q, {1, 0, -1, 0}));
  c.insert(dense_to_sparse(q, {2, 2, 0, 0}));
  CHECK(b == c);
}

TEST_CASE("kernel vectors map to zero and have the right count") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> c(-2, 2);
  for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(5)}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<SparseVector> images;
      for (int i = 0; i < 6; ++i) {
        std::vector<long> v(4);
        for (long& x : v) x = c(rng);
        images.push_back(dense_to_sparse(f, v));
      }
      auto ker = kernel(f, images);
      CHECK(ker.size() + rank_of(f, 4, images) == images.size());
      for (const auto& k : ker) CHECK(combine(f, images, k).empty());
      CHECK(rank_of(f, images.size(), ker) == ker.size());
    }
  }
}

TEST_CASE("prime and rational elimination agree on small integer data") {
  // Entries in {-1, 0, 1}: ranks over Q and over F_32003 coincide for
  // these sizes unless a minor is divisible by 32003, which cannot happen
  // with 6x6 minors of such entries (|det| <= 6! = 720).
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> e(-1, 1);
  const FieldSpec q, p = FieldSpec::prime(32003);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::vector<long>> data(6, std::vector<long>(7));
    for (auto& row : data)
      for (long& x : row) x = e(rng) * e(rng);
    EchelonBasis bq(q, 7), bp(p, 7);
    std::vector<SparseVector> imgs;
    for (const auto& row : data) {
      bq.insert(dense_to_sparse(q, row));
      bp.insert(dense_to_sparse(p, row));
      imgs.push_back(dense_to_sparse(p, row));
    }
    CHECK(bq.rank() == bp.rank());
    CHECK(bq.pivots() == bp.pivots());
    const auto ker = kernel(p, imgs);
    CHECK(ker.size() == 6 - bp.rank());
    for (const SparseVector& k : ker) CHECK(combine(p, imgs, k).empty());
    for (const SparseVector& row : bp.rows()) {
      CHECK(bp.contains(row));
      CHECK(row.front().second == p.one());
    }
  }
}
