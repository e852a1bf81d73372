#include "koszulkit/linalg.hpp"

#include <algorithm>

#include "koszulkit/error.hpp"

namespace koszulkit {

SparseVector axpy(const SparseVector& a, const Scalar& c, const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Scalar v = c * b[j].second;
      if (!v.is_zero()) out.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      Scalar v = a[i].second + c * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVector scaled(const SparseVector& v, const Scalar& c) {
  if (c.is_zero()) return {};
  SparseVector out = v;
  for (auto& [i, x] : out) x *= c;
  return out;
}

SparseVector unit_vector(const FieldSpec& field, std::uint32_t index) { return {{index, field.one()}}; }

Scalar entry(const SparseVector& v, std::uint32_t index, const FieldSpec& field) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const auto& e, std::uint32_t k) { return e.first < k; });
  return it != v.end() && it->first == index ? it->second : field.zero();
}

EchelonBasis::EchelonBasis(FieldSpec field, std::size_t dimension) : field_(field), dimension_(dimension) {}

namespace {

using FastRow = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

// a + c b over F_p.
FastRow fast_axpy(const FastRow& a, std::uint64_t c, const FastRow& b, std::uint64_t p) {
  FastRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, static_cast<std::uint32_t>(c * b[j].second % p));
      ++j;
    } else {
      auto v = static_cast<std::uint32_t>((a[i].second + c * b[j].second) % p);
      if (v) out.emplace_back(a[i].first, v);
      ++i, ++j;
    }
  }
  return out;
}

void fast_scale(FastRow& r, std::uint64_t c, std::uint64_t p) {
  for (auto& [i, x] : r) x = static_cast<std::uint32_t>(x * c % p);
}

std::uint64_t fast_inverse(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  for (a %= p; e; e >>= 1, a = a * a % p)
    if (e & 1) r = r * a % p;
  return r;
}

FastRow to_fast(const SparseVector& v) {
  FastRow out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) out.emplace_back(i, static_cast<std::uint32_t>(x.residue()));
  return out;
}

}  // namespace

SparseVector EchelonBasis::to_sparse(const FastRow& r) const {
  SparseVector out;
  out.reserve(r.size());
  for (const auto& [i, x] : r) out.emplace_back(i, field_.from_residue(x));
  return out;
}

EchelonBasis::FastRow EchelonBasis::fast_reduce(const SparseVector& v) const {
  // Rows are fully reduced, so the pivot coefficients of v are final.
  thread_local std::vector<std::uint64_t> dense;
  thread_local std::vector<char> mark;
  thread_local std::vector<std::uint32_t> touched;
  if (dense.size() < dimension_) {
    dense.resize(dimension_, 0);
    mark.resize(dimension_, 0);
  }
  const std::uint64_t p = field_.characteristic();
  touched.clear();
  for (const auto& [i, x] : v) {
    dense[i] = x.residue();
    mark[i] = 1;
    touched.push_back(i);
  }
  for (const auto& [i, x] : v) {
    auto it = fast_.find(i);
    if (it == fast_.end()) continue;
    const std::uint64_t c = p - dense[i];
    if (c == p) continue;
    for (const auto& [j, y] : it->second) {
      if (!mark[j]) {
        mark[j] = 1;
        touched.push_back(j);
      }
      dense[j] = (dense[j] + c * y) % p;
    }
  }
  std::sort(touched.begin(), touched.end());
  FastRow out;
  for (std::uint32_t j : touched) {
    if (dense[j]) out.emplace_back(j, static_cast<std::uint32_t>(dense[j]));
    dense[j] = 0;
    mark[j] = 0;
  }
  return out;
}

SparseVector EchelonBasis::reduce(SparseVector v) const {
  if (field_.is_prime()) return to_sparse(fast_reduce(v));
  std::size_t pos = 0;
  while (pos < v.size()) {
    auto it = rows_.find(v[pos].first);
    if (it == rows_.end()) {
      ++pos;
      continue;
    }
    // rows are monic with pivot first; entries before pos are untouched
    v = axpy(v, -v[pos].second, it->second);
  }
  return v;
}

bool EchelonBasis::insert(const SparseVector& v) {
  for (const auto& e : v)
    if (e.first >= dimension_) throw Error(ErrorCode::InvalidArgument, "vector index out of range");
  if (field_.is_prime()) {
    const std::uint64_t p = field_.characteristic();
    FastRow r = fast_reduce(v);
    if (r.empty()) return false;
    fast_scale(r, fast_inverse(r.front().second, p), p);
    const std::uint32_t pivot = r.front().first;
    for (auto& [piv, row] : fast_) {
      auto it = std::lower_bound(row.begin(), row.end(), pivot,
                                 [](const auto& e, std::uint32_t k) { return e.first < k; });
      if (it != row.end() && it->first == pivot) row = fast_axpy(row, p - it->second, r, p);
    }
    fast_.emplace(pivot, std::move(r));
    return true;
  }
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  r = scaled(r, r.front().second.inverse());
  const std::uint32_t pivot = r.front().first;
  for (auto& [p, row] : rows_) {
    Scalar c = entry(row, pivot, field_);
    if (!c.is_zero()) row = axpy(row, -c, r);
  }
  rows_.emplace(pivot, std::move(r));
  return true;
}

bool EchelonBasis::contains_all(const EchelonBasis& other) const {
  for (const SparseVector& row : other.rows())
    if (!contains(row)) return false;
  return true;
}

std::vector<SparseVector> EchelonBasis::rows() const {
  std::vector<SparseVector> out;
  if (field_.is_prime()) {
    out.reserve(fast_.size());
    for (const auto& [p, row] : fast_) out.push_back(to_sparse(row));
    return out;
  }
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(row);
  return out;
}

std::vector<std::uint32_t> EchelonBasis::pivots() const {
  std::vector<std::uint32_t> out;
  if (field_.is_prime())
    for (const auto& [p, row] : fast_) out.push_back(p);
  else
    for (const auto& [p, row] : rows_) out.push_back(p);
  return out;
}

std::vector<SparseVector> kernel(const FieldSpec& field, const std::vector<SparseVector>& images) {
  if (field.is_prime()) {
    const std::uint64_t p = field.characteristic();
    struct Row {
      FastRow value;
      FastRow combo;
    };
    std::map<std::uint32_t, Row> rows;
    std::vector<SparseVector> result;
    for (std::size_t i = 0; i < images.size(); ++i) {
      FastRow v = to_fast(images[i]);
      FastRow combo{{static_cast<std::uint32_t>(i), 1}};
      std::size_t pos = 0;
      while (pos < v.size()) {
        auto it = rows.find(v[pos].first);
        if (it == rows.end()) {
          ++pos;
          continue;
        }
        const std::uint64_t c = p - v[pos].second;
        v = fast_axpy(v, c, it->second.value, p);
        combo = fast_axpy(combo, c, it->second.combo, p);
      }
      if (v.empty()) {
        SparseVector out;
        for (const auto& [j, x] : combo) out.emplace_back(j, field.from_residue(x));
        result.push_back(std::move(out));
        continue;
      }
      const std::uint64_t inv = fast_inverse(v.front().second, p);
      const std::uint32_t pivot = v.front().first;
      fast_scale(v, inv, p);
      fast_scale(combo, inv, p);
      rows.emplace(pivot, Row{std::move(v), std::move(combo)});
    }
    return result;
  }
  struct Row {
    SparseVector value;
    SparseVector combo;
  };
  std::map<std::uint32_t, Row> rows;
  std::vector<SparseVector> result;
  for (std::size_t i = 0; i < images.size(); ++i) {
    SparseVector v = images[i];
    SparseVector combo = unit_vector(field, static_cast<std::uint32_t>(i));
    std::size_t pos = 0;
    while (pos < v.size()) {
      auto it = rows.find(v[pos].first);
      if (it == rows.end()) {
        ++pos;
        continue;
      }
      Scalar c = -v[pos].second;
      v = axpy(v, c, it->second.value);
      combo = axpy(combo, c, it->second.combo);
    }
    if (v.empty()) {
      result.push_back(std::move(combo));
      continue;
    }
    Scalar inv = v.front().second.inverse();
    std::uint32_t pivot = v.front().first;
    rows.emplace(pivot, Row{scaled(v, inv), scaled(combo, inv)});
  }
  return result;
}

std::size_t rank_of(const FieldSpec& field, std::size_t dimension, const std::vector<SparseVector>& vectors) {
  EchelonBasis b(field, dimension);
  for (const auto& v : vectors) b.insert(v);
  return b.rank();
}

}  // namespace koszulkit

namespace koszulkit {

Accumulator::Accumulator(const FieldSpec& field, std::size_t dimension)
    : field_(field), values_(dimension, field.zero()), touched_(dimension, 0) {}

void Accumulator::add(std::uint32_t index, const Scalar& c) {
  if (index >= values_.size()) throw Error(ErrorCode::InvalidArgument, "accumulator index out of range");
  if (!touched_[index]) {
    touched_[index] = 1;
    indices_.push_back(index);
  }
  values_[index] += c;
}

void Accumulator::add(const SparseVector& v, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [i, x] : v) add(i, c.is_one() ? x : c * x);
}

SparseVector Accumulator::take() {
  std::sort(indices_.begin(), indices_.end());
  SparseVector out;
  for (std::uint32_t i : indices_) {
    if (!values_[i].is_zero()) out.emplace_back(i, values_[i]);
    values_[i] = field_.zero();
    touched_[i] = 0;
  }
  indices_.clear();
  return out;
}

}  // namespace koszulkit
