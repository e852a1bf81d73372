#include "koszulkit/quotient.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "koszulkit/error.hpp"

namespace koszulkit {

QuotientAlgebra::QuotientAlgebra(Presentation pres, int gb_bound)
    : QuotientAlgebra(pres, groebner_complete(pres, gb_bound)) {}

QuotientAlgebra::QuotientAlgebra(Presentation pres, GroebnerBasis gb)
    : pres_(std::move(pres)), gb_(std::move(gb)), mutex_(std::make_unique<std::recursive_mutex>()) {
  if (!(gb_.order() == pres_.order) || !(gb_.field() == pres_.field))
    throw Error(ErrorCode::InvalidArgument, "Groebner basis does not belong to the presentation");
}

void QuotientAlgebra::require(int d) const {
  if (d < 0) throw Error(ErrorCode::DegreeOutOfRange, "negative degree");
  if (!available(d))
    throw Error(ErrorCode::InsufficientGBBound, "degree " + std::to_string(d) +
                                                    " exceeds the Groebner basis bound " +
                                                    std::to_string(gb_.degree_bound()));
}

QuotientAlgebra::DegreeData& QuotientAlgebra::data(int d) const {
  require(d);
  std::lock_guard<std::recursive_mutex> lock(*mutex_);
  if (degrees_.size() <= static_cast<std::size_t>(d)) degrees_.resize(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    auto& slot = degrees_[static_cast<std::size_t>(k)];
    if (slot) continue;
    auto dd = std::make_unique<DegreeData>();
    if (k == 0) {
      dd->words.push_back(Word{});
    } else {
      for (const Word& u : degrees_[static_cast<std::size_t>(k) - 1]->words)
        for (Letter g : pres_.order.ascending()) {
          Word w = u * g;
          if (gb_.is_normal(w)) dd->words.push_back(std::move(w));
        }
    }
    for (std::uint32_t i = 0; i < dd->words.size(); ++i) dd->index.emplace(dd->words[i], i);
    slot = std::move(dd);
  }
  return *degrees_[static_cast<std::size_t>(d)];
}

const std::vector<Word>& QuotientAlgebra::normal_words(int d) const { return data(d).words; }

std::uint32_t QuotientAlgebra::index_of(const Word& w) const {
  const DegreeData& dd = data(w.degree());
  auto it = dd.index.find(w);
  if (it == dd.index.end()) throw Error(ErrorCode::InvalidArgument, "word is not normal");
  return it->second;
}

void QuotientAlgebra::ensure_times(int d) const {
  DegreeData& dd = data(d);
  DegreeData& next = data(d + 1);
  std::lock_guard<std::recursive_mutex> lock(*mutex_);
  if (dd.times_ready) return;
  const std::size_t n = num_generators();
  dd.times.assign(n, std::vector<SparseVector>(dd.words.size()));
  for (std::size_t i = 0; i < dd.words.size(); ++i) {
    for (Letter g = 0; g < n; ++g) {
      NcPoly nf = gb_.normal_form(dd.words[i] * g);
      SparseVector v;
      for (const auto& [w, c] : nf.terms()) v.emplace_back(next.index.at(w), c);
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      dd.times[g][i] = std::move(v);
    }
  }
  dd.times_ready = true;
}

const SparseVector& QuotientAlgebra::basis_times_generator(int d, std::uint32_t index, Letter g) const {
  ensure_times(d);
  return data(d).times.at(g).at(index);
}

SparseVector QuotientAlgebra::coordinates(const NcPoly& f) const {
  if (!(f.field() == field())) throw Error(ErrorCode::FieldMismatch, "polynomial over a different field");
  if (f.is_zero()) return {};
  if (!f.is_homogeneous()) throw Error(ErrorCode::InvalidArgument, "coordinates need a homogeneous polynomial");
  const int d = f.degree();
  const DegreeData& dd = data(d);
  Accumulator acc(field(), dd.words.size());
  for (const auto& [w, c] : f.terms()) {
    NcPoly nf = gb_.normal_form(w);
    for (const auto& [u, a] : nf.terms()) acc.add(dd.index.at(u), c * a);
  }
  return acc.take();
}

SparseVector QuotientAlgebra::word_coordinates(const Word& w) const {
  return coordinates(NcPoly::monomial(field(), w));
}

NcPoly QuotientAlgebra::element(int d, const SparseVector& v) const {
  const DegreeData& dd = data(d);
  NcPoly f(field());
  for (const auto& [i, c] : v) f.add_term(dd.words.at(i), c);
  return f;
}

SparseVector QuotientAlgebra::multiply_generator(int d, const SparseVector& v, Letter g) const {
  ensure_times(d);
  const DegreeData& dd = data(d);
  if (v.size() == 1) return scaled(dd.times.at(g).at(v[0].first), v[0].second);
  Accumulator acc(field(), dim(d + 1));
  for (const auto& [i, c] : v) acc.add(dd.times.at(g).at(i), c);
  return acc.take();
}

SparseVector QuotientAlgebra::multiply_word(int d, const SparseVector& v, const Word& w) const {
  SparseVector cur = v;
  for (std::size_t k = 0; k < w.size() && !cur.empty(); ++k) cur = multiply_generator(d + static_cast<int>(k), cur, w[k]);
  return cur;
}

SparseVector QuotientAlgebra::multiply(int d, const SparseVector& v, int e, const SparseVector& u) const {
  const DegreeData& de = data(e);
  Accumulator acc(field(), dim(d + e));
  for (const auto& [j, c] : u) acc.add(multiply_word(d, v, de.words.at(j)), c);
  return acc.take();
}

TruncatedSeries QuotientAlgebra::hilbert_function(int max_degree) const {
  TruncatedSeries s(max_degree);
  for (int d = 0; d <= max_degree; ++d) s[d] = static_cast<long>(dim(d));
  return s;
}

RationalFunction avoidance_series(std::size_t num_generators, const std::vector<Word>& forbidden) {
  for (const Word& f : forbidden)
    if (f.empty()) throw Error(ErrorCode::InvalidArgument, "the empty word cannot be forbidden");
  const std::set<Word> bad(forbidden.begin(), forbidden.end());
  auto has_bad_suffix = [&](const Word& w) {
    for (const Word& f : bad)
      if (w.ends_with(f)) return true;
    return false;
  };
  auto has_bad_factor = [&](const Word& w) {
    for (const Word& f : bad)
      if (w.contains(f)) return true;
    return false;
  };
  std::set<Word> prefix_set;
  for (const Word& f : bad)
    for (std::size_t k = 0; k < f.size(); ++k) {
      Word p = f.prefix(k);
      if (!has_bad_factor(p)) prefix_set.insert(p);
    }
  prefix_set.insert(Word{});
  std::vector<Word> states(prefix_set.begin(), prefix_set.end());  // states[0] is the empty word
  std::map<Word, std::size_t> id;
  for (std::size_t i = 0; i < states.size(); ++i) id.emplace(states[i], i);

  const std::size_t m = states.size();
  const RationalFunction zero;
  std::vector<std::vector<RationalFunction>> a(m, std::vector<RationalFunction>(m, zero));
  std::vector<RationalFunction> b(m, RationalFunction(Polynomial{1}));
  for (std::size_t s = 0; s < m; ++s) {
    std::vector<long> counts(m, 0);
    for (Letter x = 0; x < num_generators; ++x) {
      Word w = states[s] * x;
      if (has_bad_suffix(w)) continue;
      std::size_t target = 0;
      for (std::size_t k = w.size(); k > 0; --k) {
        auto it = id.find(w.suffix(k));
        if (it != id.end()) {
          target = it->second;
          break;
        }
      }
      ++counts[target];
    }
    a[s][s] = RationalFunction(Polynomial{1});
    for (std::size_t t = 0; t < m; ++t)
      if (counts[t]) a[s][t] = a[s][t] - RationalFunction(Polynomial{0, counts[t]});
  }
  return solve_linear_system(std::move(a), std::move(b))[0];
}

RationalFunction monomial_hilbert_ratfunc(const Presentation& pres) {
  if (!pres.all_monomial()) throw Error(ErrorCode::NonMonomialInput, "relations are not all monomials");
  std::vector<Word> words;
  for (const NcPoly& f : pres.relations) words.push_back(f.terms().begin()->first);
  return avoidance_series(pres.num_generators(), words);
}

RationalFunction monomial_hilbert_ratfunc(const QuotientAlgebra& q) { return monomial_hilbert_ratfunc(q.presentation()); }

RationalFunction hilbert_ratfunc(const QuotientAlgebra& q) {
  if (!q.gb().complete())
    throw Error(ErrorCode::InsufficientGBBound, "the Groebner basis is not complete; raise the bound");
  return avoidance_series(q.num_generators(), q.gb().leading_monomials());
}

Presentation quadratic_dual(const Presentation& pres) {
  for (const NcPoly& f : pres.relations)
    if (f.degree() != 2) throw Error(ErrorCode::NonQuadraticInput, "dual needs quadratic relations");
  const std::size_t n = pres.num_generators();
  // Quadratic words, greatest first, so echelon pivots are leading words.
  std::vector<Word> words;
  for (Letter a = 0; a < n; ++a)
    for (Letter b = 0; b < n; ++b) words.push_back(Word{a, b});
  std::sort(words.begin(), words.end(),
            [&](const Word& u, const Word& v) { return word_compare(u, v, pres.order) == Cmp::GT; });
  std::map<Word, std::uint32_t> pos;
  for (std::uint32_t i = 0; i < words.size(); ++i) pos.emplace(words[i], i);

  std::vector<SparseVector> images(words.size());
  for (std::uint32_t r = 0; r < pres.relations.size(); ++r)
    for (const auto& [w, c] : pres.relations[r].terms()) images[pos.at(w)].emplace_back(r, c);
  EchelonBasis complement(pres.field, words.size());
  for (const SparseVector& k : kernel(pres.field, images)) complement.insert(k);

  std::vector<NcPoly> relations;
  for (const SparseVector& row : complement.rows()) {
    NcPoly f(pres.field);
    for (const auto& [i, c] : row) f.add_term(words[i], c);
    relations.push_back(std::move(f));
  }
  std::vector<std::string> names;
  for (const auto& nm : pres.names) names.push_back(nm + "'");
  return Presentation::make(std::move(names), pres.field, pres.order, std::move(relations));
}

TruncatedSeries froberg_check(const Presentation& pres, int max_degree) {
  QuotientAlgebra r(pres, max_degree);
  QuotientAlgebra dual(quadratic_dual(pres), max_degree);
  TruncatedSeries product = r.hilbert_function(max_degree) * dual.hilbert_function(max_degree).substitute_negated();
  product[0] -= 1;
  return product;
}

Presentation tensor_product(const Presentation& a, const Presentation& b) {
  if (!(a.field == b.field)) throw Error(ErrorCode::FieldMismatch, "tensor factors over different fields");
  const std::size_t na = a.num_generators();
  const std::size_t nb = b.num_generators();
  std::vector<std::string> names = a.names;
  for (const std::string& nm : b.names) {
    std::string candidate = nm;
    while (std::find(names.begin(), names.end(), candidate) != names.end() ||
           (candidate != nm && std::find(b.names.begin(), b.names.end(), candidate) != b.names.end()))
      candidate += "_2";
    names.push_back(candidate);
  }
  std::vector<Letter> ascending;
  for (Letter g : b.order.ascending()) ascending.push_back(static_cast<Letter>(na + g));
  for (Letter g : a.order.ascending()) ascending.push_back(g);

  std::vector<NcPoly> relations = a.relations;
  for (const NcPoly& f : b.relations)
    relations.push_back(f.map_words([&](const Word& w) {
      std::vector<Letter> ls;
      for (Letter l : w.letters()) ls.push_back(static_cast<Letter>(na + l));
      return Word(std::move(ls));
    }));
  for (Letter x = 0; x < na; ++x)
    for (Letter y = 0; y < nb; ++y) {
      Letter yy = static_cast<Letter>(na + y);
      relations.push_back(NcPoly::monomial(a.field, {x, yy}) - NcPoly::monomial(a.field, {yy, x}));
    }
  return Presentation::make(std::move(names), a.field, GenOrder(std::move(ascending)), std::move(relations));
}

bool semi_tensor_check(const Presentation& c, const Presentation& a, const Presentation& b, int bound) {
  if (!(c.field == a.field) || !(c.field == b.field))
    throw Error(ErrorCode::FieldMismatch, "semi-tensor inputs over different fields");
  auto find_name = [&](const std::string& nm) -> Letter {
    auto it = std::find(c.names.begin(), c.names.end(), nm);
    if (it == c.names.end()) throw Error(ErrorCode::InvalidArgument, "generator " + nm + " missing from C");
    return static_cast<Letter>(it - c.names.begin());
  };
  std::vector<Letter> from_a, from_b;
  for (const auto& nm : a.names) from_a.push_back(find_name(nm));
  for (const auto& nm : b.names) from_b.push_back(find_name(nm));
  std::set<Letter> used(from_a.begin(), from_a.end());
  used.insert(from_b.begin(), from_b.end());
  if (used.size() != c.num_generators() || from_a.size() + from_b.size() != c.num_generators())
    throw Error(ErrorCode::InvalidArgument, "generators of C must split into those of A and B");

  std::vector<Letter> ascending;
  for (Letter g : b.order.ascending()) ascending.push_back(from_b[g]);
  for (Letter g : a.order.ascending()) ascending.push_back(from_a[g]);
  const Presentation cc = c.with_order(GenOrder(std::move(ascending)));

  GroebnerBasis gc = groebner_complete(cc, bound);
  GroebnerBasis ga = groebner_complete(a, bound);
  GroebnerBasis gb = groebner_complete(b, bound);

  auto relabel = [](const Word& w, const std::vector<Letter>& map) {
    std::vector<Letter> ls;
    for (Letter l : w.letters()) ls.push_back(map[l]);
    return Word(std::move(ls));
  };
  std::set<Word> expected;
  for (const Word& w : ga.leading_monomials()) expected.insert(relabel(w, from_a));
  for (const Word& w : gb.leading_monomials()) expected.insert(relabel(w, from_b));
  for (Letter x : from_a)
    for (Letter y : from_b) expected.insert(Word{x, y});
  std::set<Word> actual;
  for (const Word& w : gc.leading_monomials()) actual.insert(w);

  auto upto = [bound](const std::set<Word>& s) {
    std::set<Word> out;
    for (const Word& w : s)
      if (w.degree() <= bound) out.insert(w);
    return out;
  };
  if (upto(expected) != upto(actual)) return false;
  if (!gc.complete() || !ga.complete() || !gb.complete())
    throw Error(ErrorCode::InsufficientGBBound,
                "leading monomials agree up to degree " + std::to_string(bound) + " but a basis is incomplete");
  return true;
}

}  // namespace koszulkit
