#include "koszulkit/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "koszulkit/error.hpp"

namespace koszulkit {

namespace {

NcPoly make_monic(const NcPoly& f) {
  const Scalar& lc = f.terms().rbegin()->second;
  if (lc.is_one()) return f;
  return lc.inverse() * f;
}

const Word& raw_lm(const NcPoly& f) { return f.terms().rbegin()->first; }

// Overlaps between two ranked leading monomials, first = a, second = b.
void collect_overlaps(const Word& a, const Word& b, std::size_t ia, std::size_t ib, bool inclusions,
                      std::vector<Overlap>& out) {
  const std::size_t la = a.size();
  const std::size_t lb = b.size();
  for (std::size_t k = 1; k < std::min(la, lb); ++k) {
    if (std::equal(a.letters().end() - static_cast<std::ptrdiff_t>(k), a.letters().end(), b.letters().begin()))
      out.push_back({ia, ib, a * b.suffix(lb - k), false, la - k});
  }
  if (inclusions && ia != ib && lb <= la) {
    for (std::size_t pos = a.find(b); pos != Word::npos; pos = a.find(b, pos + 1)) {
      out.push_back({ia, ib, a, true, pos});
    }
  }
}

bool overlap_less(const Overlap& x, const Overlap& y) {
  if (x.word.size() != y.word.size()) return x.word.size() < y.word.size();
  if (x.first != y.first) return x.first < y.first;
  if (x.second != y.second) return x.second < y.second;
  if (x.word != y.word) return x.word < y.word;
  return x.offset < y.offset;
}

// S-polynomial of ranked monic polys.
NcPoly ranked_s_poly(const NcPoly& gi, const NcPoly& gj, const Overlap& ov) {
  const Word& li = raw_lm(gi);
  const Word& lj = raw_lm(gj);
  if (ov.inclusion) {
    Word left = li.prefix(ov.offset);
    Word right = li.suffix(li.size() - ov.offset - lj.size());
    return gi - gj.sandwich(left, right);
  }
  Word right = lj.suffix(ov.word.size() - li.size());
  Word left = li.prefix(ov.offset);
  return gi.sandwich(Word{}, right) - gj.sandwich(left, Word{});
}

}  // namespace

GroebnerBasis::GroebnerBasis(FieldSpec field, GenOrder order)
    : field_(field),
      order_(std::move(order)),
      lm_index_(std::make_shared<std::unordered_map<Word, std::size_t, WordHash>>()),
      memo_mutex_(std::make_shared<std::mutex>()),
      memo_(std::make_shared<std::unordered_map<Word, NcPoly, WordHash>>()),
      identity_order_(order_ == GenOrder::identity(order_.size())) {}

void GroebnerBasis::set_state(std::vector<NcPoly> ranked_elements, int bound, bool complete) {
  std::sort(ranked_elements.begin(), ranked_elements.end(),
            [](const NcPoly& a, const NcPoly& b) { return raw_lm(a) < raw_lm(b); });
  ranked_ = std::move(ranked_elements);
  bound_ = bound;
  complete_ = complete;
  ranked_lm_.clear();
  lm_lengths_.clear();
  auto index = std::make_shared<std::unordered_map<Word, std::size_t, WordHash>>();
  for (std::size_t i = 0; i < ranked_.size(); ++i) {
    ranked_lm_.push_back(raw_lm(ranked_[i]));
    index->emplace(ranked_lm_.back(), i);
    lm_lengths_.push_back(ranked_lm_.back().size());
  }
  std::sort(lm_lengths_.begin(), lm_lengths_.end());
  lm_lengths_.erase(std::unique(lm_lengths_.begin(), lm_lengths_.end()), lm_lengths_.end());
  lm_index_ = std::move(index);
  memo_mutex_ = std::make_shared<std::mutex>();
  memo_ = std::make_shared<std::unordered_map<Word, NcPoly, WordHash>>();
}

std::vector<NcPoly> GroebnerBasis::elements() const {
  std::vector<NcPoly> out;
  out.reserve(ranked_.size());
  for (const NcPoly& g : ranked_) out.push_back(to_caller(g));
  return out;
}

std::vector<Word> GroebnerBasis::leading_monomials() const {
  std::vector<Word> out;
  for (const Word& w : ranked_lm_) out.push_back(order_.from_ranks(w));
  return out;
}

NcPoly GroebnerBasis::to_caller(const NcPoly& ranked) const {
  if (identity_order_) return ranked;
  return ranked.map_words([this](const Word& w) { return order_.from_ranks(w); });
}

NcPoly GroebnerBasis::to_ranked(const NcPoly& f) const {
  if (identity_order_) return f;
  return f.map_words([this](const Word& w) { return order_.to_ranks(w); });
}

std::optional<std::pair<std::size_t, std::size_t>> GroebnerBasis::find_reducer(const Word& w) const {
  if (lm_lengths_.empty()) return std::nullopt;
  const auto& letters = w.letters();
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (std::size_t len : lm_lengths_) {
      if (pos + len > w.size()) break;
      Word piece(std::vector<Letter>(letters.begin() + static_cast<std::ptrdiff_t>(pos),
                                     letters.begin() + static_cast<std::ptrdiff_t>(pos + len)));
      auto it = lm_index_->find(piece);
      if (it != lm_index_->end()) return std::make_pair(pos, it->second);
    }
  }
  return std::nullopt;
}

NcPoly GroebnerBasis::reduce_ranked(const NcPoly& f) const {
  NcPoly work = f;
  NcPoly result(field_);
  while (!work.is_zero()) {
    auto top = std::prev(work.terms().end());
    Word w = top->first;
    Scalar c = top->second;
    auto red = find_reducer(w);
    work.add_term(w, -c);
    if (!red) {
      result.add_term(w, c);
      continue;
    }
    const auto [pos, idx] = *red;
    const Word left = w.prefix(pos);
    const Word right = w.suffix(w.size() - pos - ranked_lm_[idx].size());
    const NcPoly& g = ranked_[idx];
    for (auto it = g.terms().begin(); it != std::prev(g.terms().end()); ++it)
      work.add_term(left * it->first * right, -(c * it->second));
  }
  return result;
}

NcPoly GroebnerBasis::reduce(const NcPoly& f) const {
  if (!(f.field() == field_)) throw Error(ErrorCode::FieldMismatch, "polynomial and basis fields differ");
  return to_caller(reduce_ranked(to_ranked(f)));
}

bool GroebnerBasis::is_normal(const Word& w) const { return !find_reducer(order_.to_ranks(w)); }

NcPoly GroebnerBasis::normal_form(const Word& w) const {
  const Word rw = order_.to_ranks(w);
  std::lock_guard<std::mutex> lock(*memo_mutex_);
  auto hit = memo_->find(rw);
  if (hit != memo_->end()) return to_caller(hit->second);

  NcPoly work = NcPoly::monomial(field_, rw);
  std::unordered_map<Word, Scalar, WordHash> acc;
  auto accumulate = [&acc](const Word& v, const Scalar& a) {
    auto [it, inserted] = acc.try_emplace(v, a);
    if (!inserted) it->second += a;
  };
  while (!work.is_zero()) {
    auto top = std::prev(work.terms().end());
    Word u = top->first;
    Scalar c = top->second;
    work.add_term(u, -c);
    if (auto m = memo_->find(u); m != memo_->end()) {
      for (const auto& [v, a] : m->second.terms()) accumulate(v, c * a);
      continue;
    }
    auto red = find_reducer(u);
    if (!red) {
      accumulate(u, c);
      continue;
    }
    const auto [pos, idx] = *red;
    const Word left = u.prefix(pos);
    const Word right = u.suffix(u.size() - pos - ranked_lm_[idx].size());
    const NcPoly& g = ranked_[idx];
    for (auto it = g.terms().begin(); it != std::prev(g.terms().end()); ++it)
      work.add_term(left * it->first * right, -(c * it->second));
  }
  NcPoly result(field_);
  for (const auto& [v, a] : acc) result.add_term(v, a);
  memo_->emplace(rw, result);
  return to_caller(result);
}

std::vector<Word> GroebnerBasis::normal_words(int degree) const {
  if (degree < 0) return {};
  std::vector<Word> level{Word{}};
  const Letter n = static_cast<Letter>(order_.size());
  for (int d = 1; d <= degree; ++d) {
    std::vector<Word> next;
    for (const Word& u : level) {
      for (Letter x = 0; x < n; ++x) {
        Word w = u * x;
        bool normal = true;
        for (std::size_t len : lm_lengths_) {
          if (len > w.size()) break;
          if (lm_index_->count(w.suffix(len))) {
            normal = false;
            break;
          }
        }
        if (normal) next.push_back(std::move(w));
      }
    }
    level = std::move(next);
  }
  for (Word& w : level) w = order_.from_ranks(w);
  return level;
}

std::string GroebnerBasis::render(const Presentation& pres) const {
  std::ostringstream out;
  out << "# order: ";
  for (std::size_t k = 0; k < order_.size(); ++k) {
    if (k) out << "<";
    out << pres.names.at(order_.ascending()[k]);
  }
  out << ", bound: " << bound_ << ", complete: " << (complete_ ? "true" : "false") << "\n";
  for (const NcPoly& g : elements()) out << pres.render_poly(g) << "\n";
  return out.str();
}

GroebnerBasis groebner_complete(const FieldSpec& field, const std::vector<NcPoly>& relations, const GenOrder& order,
                                int max_degree) {
  std::map<int, std::vector<NcPoly>> by_degree;
  bool beyond = false;
  for (const NcPoly& f : relations) {
    if (!(f.field() == field)) throw Error(ErrorCode::FieldMismatch, "relation over a different field");
    if (f.is_zero()) continue;
    if (!f.is_homogeneous()) throw Error(ErrorCode::NonHomogeneousRelation, "relations must be homogeneous");
    if (f.degree() < 1) throw Error(ErrorCode::InvalidArgument, "relations must have positive degree");
    for (const auto& [w, c] : f.terms())
      for (Letter l : w.letters())
        if (l >= order.size()) throw Error(ErrorCode::UnknownGenerator, "letter index out of range");
    if (f.degree() > max_degree) {
      beyond = true;
      continue;
    }
    by_degree[f.degree()].push_back(f.map_words([&](const Word& w) { return order.to_ranks(w); }));
  }

  std::vector<NcPoly> elements;
  std::map<std::size_t, std::vector<Overlap>> pending;  // by degree
  const GenOrder ranked_order = GenOrder::identity(order.size());

  auto register_element = [&](const NcPoly& g) {
    const std::size_t id = elements.size();
    elements.push_back(g);
    std::vector<Overlap> found;
    for (std::size_t j = 0; j <= id; ++j) {
      collect_overlaps(raw_lm(elements[j]), raw_lm(g), j, id, false, found);
      if (j != id) collect_overlaps(raw_lm(g), raw_lm(elements[j]), id, j, false, found);
    }
    for (Overlap& ov : found) {
      if (static_cast<int>(ov.word.size()) > max_degree) {
        if (!ranked_s_poly(elements[ov.first], elements[ov.second], ov).is_zero()) beyond = true;
      } else
        pending[ov.word.size()].push_back(std::move(ov));
    }
  };

  for (int d = 1; d <= max_degree; ++d) {
    std::vector<NcPoly> candidates;
    if (auto it = by_degree.find(d); it != by_degree.end()) candidates = it->second;
    if (auto it = pending.find(static_cast<std::size_t>(d)); it != pending.end()) {
      std::sort(it->second.begin(), it->second.end(), overlap_less);
      for (const Overlap& ov : it->second)
        candidates.push_back(ranked_s_poly(elements[ov.first], elements[ov.second], ov));
      pending.erase(it);
    }
    if (candidates.empty()) continue;

    GroebnerBasis lower(field, ranked_order);
    lower.set_state(elements, d - 1, false);

    std::vector<NcPoly> fresh;
    std::unordered_map<Word, std::size_t, WordHash> fresh_lm;
    for (const NcPoly& cand : candidates) {
      NcPoly residue(field);
      for (const auto& [w, c] : cand.terms()) residue += c * lower.normal_form(w);
      NcPoly rem(field);
      while (!residue.is_zero()) {
        auto top = std::prev(residue.terms().end());
        Word w = top->first;
        Scalar c = top->second;
        if (auto hit = fresh_lm.find(w); hit != fresh_lm.end()) {
          residue -= c * fresh[hit->second];
        } else {
          rem.add_term(w, c);
          residue.add_term(w, -c);
        }
      }
      if (rem.is_zero()) continue;
      rem = make_monic(rem);
      const Word lm = raw_lm(rem);
      for (NcPoly& e : fresh) {
        Scalar c = e.coefficient(lm);
        if (!c.is_zero()) e -= c * rem;
      }
      fresh_lm.emplace(lm, fresh.size());
      fresh.push_back(std::move(rem));
    }
    std::sort(fresh.begin(), fresh.end(), [](const NcPoly& a, const NcPoly& b) { return raw_lm(a) < raw_lm(b); });
    for (const NcPoly& g : fresh) register_element(g);
  }

  GroebnerBasis gb(field, order);
  gb.set_state(std::move(elements), max_degree, !beyond);
  return gb;
}

GroebnerBasis groebner_complete(const Presentation& pres, int max_degree) {
  return groebner_complete(pres.field, pres.relations, pres.order, max_degree);
}

std::vector<Overlap> overlaps(const std::vector<NcPoly>& polys, const GenOrder& ord) {
  std::vector<Word> lms;
  for (const NcPoly& f : polys) lms.push_back(ord.to_ranks(leading_monomial(f, ord).first));
  std::vector<Overlap> out;
  for (std::size_t i = 0; i < lms.size(); ++i)
    for (std::size_t j = 0; j < lms.size(); ++j) collect_overlaps(lms[i], lms[j], i, j, true, out);
  std::sort(out.begin(), out.end(), overlap_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (Overlap& ov : out) ov.word = ord.from_ranks(ov.word);
  return out;
}

NcPoly s_polynomial(const std::vector<NcPoly>& polys, const GenOrder& ord, const Overlap& ov) {
  auto ranked = [&](const NcPoly& f) {
    return make_monic(f.map_words([&](const Word& w) { return ord.to_ranks(w); }));
  };
  Overlap rov = ov;
  rov.word = ord.to_ranks(ov.word);
  NcPoly s = ranked_s_poly(ranked(polys.at(ov.first)), ranked(polys.at(ov.second)), rov);
  return s.map_words([&](const Word& w) { return ord.from_ranks(w); });
}

PbwVerdict pbw_certificate(const Presentation& pres) {
  for (const NcPoly& f : pres.relations)
    if (f.degree() != 2)
      throw Error(ErrorCode::NonQuadraticInput, "relation " + pres.render_poly(f) + " is not quadratic");

  // Interreduce the quadratic relations (reduced echelon form, pivots at
  // leading words).
  const GenOrder& ord = pres.order;
  std::vector<NcPoly> basis;
  for (const NcPoly& f : pres.relations) {
    NcPoly r = f.map_words([&](const Word& w) { return ord.to_ranks(w); });
    for (const NcPoly& b : basis) {
      Scalar c = r.coefficient(raw_lm(b));
      if (!c.is_zero()) r -= c * b;
    }
    if (r.is_zero()) continue;
    r = make_monic(r);
    for (NcPoly& b : basis) {
      Scalar c = b.coefficient(raw_lm(r));
      if (!c.is_zero()) b -= c * r;
    }
    basis.push_back(std::move(r));
  }
  std::sort(basis.begin(), basis.end(), [](const NcPoly& a, const NcPoly& b) { return raw_lm(a) < raw_lm(b); });

  GroebnerBasis quad(pres.field, ord);
  quad.set_state(basis, 2, false);
  PbwVerdict verdict;
  verdict.quadratic_basis = quad.elements();
  verdict.pbw = true;
  for (const Overlap& ov : overlaps(verdict.quadratic_basis, ord)) {
    NcPoly s = s_polynomial(verdict.quadratic_basis, ord, ov);
    if (!quad.reduce(s).is_zero()) {
      verdict.pbw = false;
      verdict.witness = ov.word;
      break;
    }
  }
  return verdict;
}

bool processing_identity_holds(const GroebnerBasis& gb, const Word& p, const Word& q, int r) {
  const std::size_t split = std::min(static_cast<std::size_t>(std::max(r, 0)), q.size());
  NcPoly lhs = gb.normal_form(p * q);
  NcPoly rhs = gb.normal_form(p * q.prefix(split)).sandwich(Word{}, q.suffix(q.size() - split));
  return lhs == rhs;
}

ProcessingVerdict restricted_processing_check(const GroebnerBasis& gb, int r, int max_degree) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "r must be positive");
  std::vector<std::vector<Word>> normal;
  for (int d = 0; d <= max_degree; ++d) normal.push_back(gb.normal_words(d));
  for (int total = 2; total <= max_degree; ++total) {
    for (int lp = 1; lp < total; ++lp) {
      for (const Word& p : normal[lp]) {
        for (const Word& q : normal[total - lp]) {
          if (!processing_identity_holds(gb, p, q, r))
            return {false, p, q, std::min(static_cast<std::size_t>(r), q.size())};
        }
      }
    }
  }
  return {};
}

OverlapGraph overlap_graph(const GroebnerBasis& gb) {
  const std::vector<NcPoly> elems = gb.elements();
  const std::vector<Word> lms = gb.leading_monomials();
  OverlapGraph graph;
  graph.vertices = elems.size();
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& [t, c] : elems[i].terms()) {
      if (t == lms[i]) continue;
      for (std::size_t k = 1; k <= t.size(); ++k) {
        const Word suf = t.suffix(k);
        for (std::size_t j = 0; j < lms.size(); ++j)
          if (lms[j].starts_with(suf)) edges.emplace(i, j);
      }
    }
  }
  graph.edges.assign(edges.begin(), edges.end());

  std::vector<std::vector<std::size_t>> adj(graph.vertices);
  for (const auto& [a, b] : graph.edges) adj[a].push_back(b);
  std::vector<int> colour(graph.vertices, 0);
  for (std::size_t s = 0; s < graph.vertices && graph.acyclic; ++s) {
    if (colour[s]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
    colour[s] = 1;
    while (!stack.empty() && graph.acyclic) {
      auto& [v, next] = stack.back();
      if (next < adj[v].size()) {
        std::size_t w = adj[v][next++];
        if (colour[w] == 1) {
          graph.acyclic = false;
        } else if (colour[w] == 0) {
          colour[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        colour[v] = 2;
        stack.pop_back();
      }
    }
  }
  return graph;
}

}  // namespace koszulkit
