#include "koszulkit/homology.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "koszulkit/error.hpp"

namespace koszulkit {

std::size_t TorTable::dim(int i, int j) const {
  auto it = dims.find({i, j});
  return it == dims.end() ? 0 : it->second;
}

int TorTable::top_degree(int i) const {
  int t = -1;
  for (const auto& [key, v] : dims)
    if (key.first == i && v > 0) t = std::max(t, key.second);
  return t;
}

std::string TorTable::betti_diagram() const {
  int width = 1;
  int max_shift = 0;
  for (const auto& [key, v] : dims) {
    width = std::max(width, static_cast<int>(std::to_string(v).size()));
    max_shift = std::max(max_shift, key.second - key.first);
  }
  const int cols = std::max(0, std::min(max_shift, j_max));
  std::ostringstream out;
  auto pad = [&](const std::string& s) { return std::string(static_cast<std::size_t>(width + 1) - s.size(), ' ') + s; };
  out << "j-i:";
  for (int c = 0; c <= cols; ++c) out << pad(std::to_string(c));
  out << "\n";
  for (int i = 0; i <= i_max; ++i) {
    std::string label = std::to_string(i) + ":";
    out << std::string(4 - std::min<std::size_t>(4, label.size()), ' ') << label;
    for (int c = 0; c <= cols; ++c) {
      std::size_t v = dim(i, i + c);
      out << pad(v ? std::to_string(v) : ".");
    }
    out << "\n";
  }
  return out.str();
}

MinimalResolution::MinimalResolution(GradedIdeal ideal, int i_max) : ideal_(std::move(ideal)), i_max_(i_max) {
  if (i_max < 0) throw Error(ErrorCode::InvalidArgument, "homological bound must be nonnegative");
  target_.degrees = {0};
  stages_.resize(static_cast<std::size_t>(i_max) + 1);
}

std::vector<std::size_t> MinimalResolution::offsets(const Module& m, int j) const {
  std::vector<std::size_t> out{0};
  for (int deg : m.degrees) {
    if (deg > j) break;
    out.push_back(out.back() + ideal_.ring().dim(j - deg));
  }
  return out;
}

SparseVector MinimalResolution::times_letter(const Module& m, int j, const std::vector<std::size_t>& from,
                                             const std::vector<std::size_t>& to, const SparseVector& v,
                                             Letter x) const {
  const QuotientAlgebra& r = ideal_.ring();
  SparseVector out;
  std::size_t g = 0;
  SparseVector block;
  auto flush = [&]() {
    if (block.empty()) return;
    SparseVector prod = r.multiply_generator(j - m.degrees[g], block, x);
    for (auto& [idx, c] : prod) out.emplace_back(static_cast<std::uint32_t>(to[g] + idx), std::move(c));
    block.clear();
  };
  for (const auto& [idx, c] : v) {
    while (idx >= from[g + 1]) {
      flush();
      ++g;
    }
    block.emplace_back(static_cast<std::uint32_t>(idx - from[g]), c);
  }
  flush();
  return out;
}

std::vector<std::pair<int, std::size_t>> MinimalResolution::advance() {
  const int j = degree_done_ + 1;
  const QuotientAlgebra& r = ideal_.ring();
  r.require(j);
  ideal_.extend_to(j);
  std::vector<std::pair<int, std::size_t>> gained;

  for (int i = 0; i <= i_max_; ++i) {
    Module& m = stages_[static_cast<std::size_t>(i)];
    Module& below = i == 0 ? target_ : stages_[static_cast<std::size_t>(i) - 1];
    const std::vector<std::size_t> below_prev = offsets(below, j - 1);
    const std::vector<std::size_t> below_cur = offsets(below, j);
    const std::vector<std::size_t> own_prev = offsets(m, j - 1);

    // Images of the basis (g, w) of (F_i)_j for generators of lower degree:
    // image(g, w' x) = image(g, w') x.
    std::vector<SparseVector> images;
    for (std::size_t g = 0; g < m.degrees.size() && m.degrees[g] < j; ++g) {
      const int e = j - m.degrees[g];
      for (const Word& w : r.normal_words(e)) {
        const std::size_t prev = own_prev[g] + r.index_of(w.prefix(w.size() - 1));
        images.push_back(times_letter(below, j - 1, below_prev, below_cur, m.images.at(prev), w.back()));
      }
    }

    const std::vector<SparseVector> omega = i == 0 ? ideal_.component(j).rows() : below.kernel;
    EchelonBasis span(r.field(), below_cur.back());
    for (const SparseVector& v : images) span.insert(v);
    std::size_t fresh = 0;
    const std::size_t unit_block = i == 0 ? below_cur.back() : [&] {
      std::size_t first = below.degrees.size();
      for (std::size_t g = 0; g < below.degrees.size(); ++g)
        if (below.degrees[g] == j) {
          first = g;
          break;
        }
      return first < below.degrees.size() ? below_cur[first] : below_cur.back();
    }();
    for (const SparseVector& row : omega) {
      if (!span.insert(row)) continue;
      if (!row.empty() && row.back().first >= unit_block)
        throw Error(ErrorCode::InvariantViolation, "resolution differential has a unit entry");
      m.degrees.push_back(j);
      m.differential.push_back(row);
      images.push_back(row);
      ++fresh;
    }
    if (fresh) {
      gained.emplace_back(i, fresh);
      counts_[{i, j}] = fresh;
    }
    if (i < i_max_)
      m.kernel = kernel(r.field(), images);
    else
      m.kernel.clear();
    m.images = std::move(images);
  }
  degree_done_ = j;
  return gained;
}

std::size_t MinimalResolution::generators(int i, int j) const {
  auto it = counts_.find({i, j});
  return it == counts_.end() ? 0 : it->second;
}

std::size_t MinimalResolution::free_rank(int i, int j) const {
  if (i < 0 || i > i_max_) return 0;
  std::size_t total = 0;
  for (int deg : stages_[static_cast<std::size_t>(i)].degrees)
    if (deg <= j) total += ideal_.ring().dim(j - deg);
  return total;
}

TorTable tor_table(const GradedIdeal& ideal, int i_max, int j_max, const std::string& module_id) {
  TorTable t;
  t.module = module_id;
  t.i_max = i_max;
  t.j_max = j_max;
  MinimalResolution res(ideal, i_max);
  for (int j = 0; j <= j_max; ++j)
    for (const auto& [i, c] : res.advance()) t.dims[{i, j}] = c;
  return t;
}

TorTable tor_table_trivial(std::shared_ptr<const QuotientAlgebra> ring, int i_max, int j_max) {
  TorTable t;
  t.module = "k";
  t.i_max = i_max;
  t.j_max = j_max;
  t.dims[{0, 0}] = 1;
  if (i_max >= 1 && j_max >= 1) {
    TorTable bar = tor_table(GradedIdeal::maximal(ring, 1), i_max - 1, j_max);
    for (const auto& [key, v] : bar.dims) t.dims[{key.first + 1, key.second}] = v;
  }
  return t;
}

namespace {

KoszulVerdict scan_linear(MinimalResolution& res, int d, int i_shift, int i_max, int j_max) {
  KoszulVerdict v;
  v.d = d;
  v.i_max = i_max;
  v.j_max = j_max;
  while (res.degree_done() < j_max) {
    auto gained = res.advance();
    const int j = res.degree_done();
    for (const auto& [i, c] : gained) {
      if (i == 0 && i_shift == 0 && j != d)
        throw Error(ErrorCode::NotSingleDegreeGenerated,
                    "module has generators in degrees " + std::to_string(d) + " and " + std::to_string(j));
      const int ii = i + i_shift;
      if (j != ii + d) {
        v.koszul = false;
        v.i = ii;
        v.j = j;
        v.dim = c;
        return v;
      }
    }
  }
  return v;
}

}  // namespace

KoszulVerdict koszul_certificate(const GradedIdeal& ideal, int i_max) {
  // The generation degree is the lowest nonzero component; an ideal that
  // vanishes through degree i_max + 2 is treated as zero.
  int d = -1;
  const int look = std::max(ideal.computed_to(), i_max + 2);
  GradedIdeal probe = ideal;
  for (int k = 0; k <= look; ++k) {
    probe.extend_to(k);
    if (probe.dim(k) > 0) {
      d = k;
      break;
    }
  }
  if (d < 0) {
    KoszulVerdict v;
    v.i_max = i_max;
    v.j_max = i_max + 1;
    return v;
  }
  const int j_max = i_max + d + 1;
  MinimalResolution res(probe, i_max);
  return scan_linear(res, d, 0, i_max, j_max);
}

KoszulVerdict koszul_certificate_trivial(std::shared_ptr<const QuotientAlgebra> ring, int i_max) {
  KoszulVerdict v;
  v.i_max = i_max;
  v.j_max = i_max + 1;
  if (i_max == 0) return v;
  MinimalResolution res(GradedIdeal::maximal(ring, 1), i_max - 1);
  // H_i(k)_j = H_{i-1}(R_+)_j, linear when j = i.
  KoszulVerdict w = scan_linear(res, 0, 1, i_max, i_max + 1);
  w.d = 0;
  return w;
}

Rational rate_estimate(const TorTable& table) {
  Rational best(1);
  for (int i = 2; i <= table.i_max; ++i) {
    const int t = table.top_degree(i);
    if (t < 0) continue;
    Rational q(t - 1, i - 1);
    q.canonicalize();
    if (q > best) best = q;
  }
  return best;
}

bool rate_bound_check(const TorTable& table, int m, int d) {
  for (int i = 0; i <= table.i_max; ++i) {
    const int t = table.top_degree(i);
    if (t >= 0 && t > m + d * i) return false;
  }
  return true;
}

bool rate_bound_check(const GradedIdeal& ideal, int d, int i_max) {
  GradedIdeal copy = ideal;
  const int upto = std::max(copy.computed_to(), d);
  copy.extend_to(upto);
  const int m = std::max(copy.min_generators(upto).m, 0);
  return rate_bound_check(tor_table(copy, i_max, m + d * i_max + 1), m, d);
}

std::vector<std::vector<Word>> anick_chains_quadratic_monomial(const Presentation& pres, int i_max) {
  std::set<Word> pairs;
  for (const NcPoly& f : pres.relations) {
    if (!f.is_monomial() || f.degree() != 2)
      throw Error(ErrorCode::NonQuadraticMonomialInput, "relation " + pres.render_poly(f) + " is not a quadratic monomial");
    pairs.insert(f.terms().begin()->first);
  }
  std::vector<std::vector<Word>> chains{{Word{}}};
  if (i_max >= 1) {
    std::vector<Word> gens;
    for (Letter g : pres.order.ascending()) gens.push_back(Word{g});
    chains.push_back(gens);
  }
  for (int i = 2; i <= i_max; ++i) {
    std::vector<Word> next;
    for (const Word& c : chains.back())
      for (Letter g : pres.order.ascending())
        if (pairs.count(Word{c.back(), g})) next.push_back(c * g);
    chains.push_back(std::move(next));
  }
  return chains;
}

}  // namespace koszulkit
