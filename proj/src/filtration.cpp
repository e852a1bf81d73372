#include "koszulkit/filtration.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "koszulkit/error.hpp"

namespace koszulkit {

void FiltrationTable::add_ideal(const std::string& id, std::vector<NcPoly> gens) {
  if (!ideals.contains(id)) ids.push_back(id);
  ideals[id] = std::move(gens);
}

void FiltrationTable::add_entry(const std::string& id, const std::string& parent, NcPoly x,
                                const std::string& colon) {
  entries[id] = FiltrationEntry{parent, std::move(x), colon};
}

namespace {

std::string first_failing_degree(const GradedIdeal& a, const GradedIdeal& b, int max_degree) {
  for (int d = 0; d <= max_degree; ++d)
    if (!(a.component(d) == b.component(d))) return std::to_string(d);
  return {};
}

struct SpecialIds {
  std::string zero;
  std::string maximal;
};

SpecialIds special_ids(const FiltrationTable& t, const std::map<std::string, GradedIdeal>& built, int max_degree) {
  SpecialIds s;
  const GradedIdeal maximal = GradedIdeal::maximal(t.ring, std::min(max_degree, 1));
  for (const std::string& id : t.ids) {
    const GradedIdeal& ideal = built.at(id);
    if (s.zero.empty() && ideal.is_zero_to(max_degree)) s.zero = id;
    if (s.maximal.empty() && !ideal.is_unit() && maximal.contained_in(ideal, std::min(max_degree, 1)))
      s.maximal = id;
  }
  return s;
}

// Zero and maximal ideals identified from the generators alone.
SpecialIds special_ids_from_gens(const FiltrationTable& t) {
  SpecialIds s;
  const std::size_t n = t.ring->num_generators();
  for (const std::string& id : t.ids) {
    const auto& gens = t.ideals.at(id);
    bool all_zero = std::all_of(gens.begin(), gens.end(), [](const NcPoly& g) { return g.is_zero(); });
    if (s.zero.empty() && all_zero) s.zero = id;
    EchelonBasis span(t.ring->field(), n);
    for (const NcPoly& g : gens)
      if (!g.is_zero() && g.degree() == 1) span.insert(t.ring->coordinates(g));
    if (s.maximal.empty() && n > 0 && span.rank() == n) s.maximal = id;
  }
  return s;
}

}  // namespace

VerificationReport verify_filtration(const FiltrationTable& table, int max_degree, int i_max) {
  if (!table.ring) throw Error(ErrorCode::InvalidArgument, "filtration table without a ring");
  VerificationReport rep;
  rep.internal_bound = max_degree;
  rep.hom_bound = i_max;
  auto fail = [&](std::string msg) {
    rep.valid = false;
    rep.violations.push_back(std::move(msg));
  };

  std::map<std::string, GradedIdeal> built;
  for (const std::string& id : table.ids)
    built.emplace(id, GradedIdeal::generated(table.ring, table.ideals.at(id), max_degree));

  const SpecialIds special = special_ids(table, built, max_degree);
  if (special.zero.empty()) fail("zero ideal missing");
  if (special.maximal.empty()) fail("maximal ideal missing");

  for (const std::string& id : table.ids) {
    const GradedIdeal& ideal = built.at(id);
    if (id != special.zero && ideal.is_unit()) fail(id + ": unit ideal in the table");
    rep.generator_degree[id] = ideal.min_generators(max_degree).m;
  }

  // Closure of every entry.
  for (const std::string& id : table.ids) {
    if (id == special.zero) continue;
    auto it = table.entries.find(id);
    if (it == table.entries.end()) {
      fail(id + ": entry missing");
      continue;
    }
    const FiltrationEntry& e = it->second;
    if (!built.contains(e.parent)) {
      fail(id + ": parent id unresolved");
      continue;
    }
    if (e.x.is_zero() || !e.x.is_homogeneous() || e.x.degree() < 1) {
      fail(id + ": witness is not homogeneous of positive degree");
      continue;
    }
    const GradedIdeal& j = built.at(e.parent);
    GradedIdeal sum = GradedIdeal::sum(j, {e.x}, max_degree);
    if (std::string d = first_failing_degree(built.at(id), sum, max_degree); !d.empty())
      fail(id + ": I != J + xR in degree " + d);
    if (j.contains(e.x)) fail(id + ": witness lies in the parent, colon is the unit ideal");
    if (rep.generator_degree[e.parent] > rep.generator_degree[id])
      fail(id + ": m(J) > m(I)");
    if (table.truncated.contains(id)) {
      rep.notes.push_back(id + ": colon beyond the unrolling budget, not checked");
      continue;
    }
    if (!built.contains(e.colon)) {
      fail(id + ": colon id unresolved");
      continue;
    }
    GradedIdeal colon = GradedIdeal::colon(e.x, j, max_degree);
    if (std::string d = first_failing_degree(colon, built.at(e.colon), max_degree); !d.empty())
      fail(id + ": colon differs from " + e.colon + " in degree " + d);
  }

  // Well-founded descent along parents.
  for (const std::string& id : table.ids) {
    std::string cur = id;
    std::size_t steps = 0;
    while (cur != special.zero && table.entries.contains(cur) && steps <= table.ids.size()) {
      cur = table.entries.at(cur).parent;
      ++steps;
    }
    if (steps > table.ids.size()) {
      fail(id + ": parent chain is cyclic");
      break;
    }
  }

  if (!special.maximal.empty() && !special.zero.empty()) {
    std::vector<std::string> chain{special.maximal};
    std::string cur = special.maximal;
    while (cur != special.zero && table.entries.contains(cur) && chain.size() <= table.ids.size()) {
      cur = table.entries.at(cur).parent;
      chain.push_back(cur);
    }
    if (cur == special.zero) rep.flag_chain.assign(chain.rbegin(), chain.rend());
  }

  for (const std::string& id : table.ids) {
    if (id == special.zero) continue;
    const GradedIdeal& ideal = built.at(id);
    if (ideal.is_unit()) continue;
    if (table.kind == FiltrationKind::Koszul) {
      if (!ideal.degree_one_generated(max_degree)) {
        fail(id + ": not generated in degree one");
        continue;
      }
      KoszulVerdict v = koszul_certificate(ideal, i_max);
      rep.certificates[id] = v;
      if (!v.koszul)
        fail(id + ": H_" + std::to_string(v.i) + " nonzero in degree " + std::to_string(v.j));
    } else {
      const int m = rep.generator_degree[id];
      if (m > table.degree) {
        fail(id + ": generator degree " + std::to_string(m) + " exceeds " + std::to_string(table.degree));
        continue;
      }
      if (!rate_bound_check(ideal, table.degree, i_max)) fail(id + ": t_i(I) > m(I) + d i");
    }
  }
  return rep;
}

namespace {

std::string monomial_id(const Presentation& pres, std::vector<Word> gens) {
  if (gens.empty()) return "0";
  std::sort(gens.begin(), gens.end());
  std::string out = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += pres.render_word(gens[i]);
  }
  return out + ")";
}

std::vector<NcPoly> monomials(const FieldSpec& field, const std::vector<Word>& ws) {
  std::vector<NcPoly> out;
  for (const Word& w : ws) out.push_back(NcPoly::monomial(field, w));
  return out;
}

bool has_prefix_in(const Word& w, const std::vector<Word>& set) {
  return std::any_of(set.begin(), set.end(), [&](const Word& s) { return w.starts_with(s); });
}

// Minimal monomial generators of (x : (S)) in a monomial algebra, through
// degree max_degree: normal words a with x a = 0 or x a in (S), no proper
// prefix of which already qualifies.
std::vector<Word> monomial_colon(const QuotientAlgebra& r, const Word& x, const std::vector<Word>& s,
                                 int max_degree) {
  std::vector<Word> gens;
  for (int e = 1; e <= max_degree; ++e) {
    for (const Word& a : r.normal_words(e)) {
      if (has_prefix_in(a, gens)) continue;
      Word xa = x * a;
      if (!r.gb().is_normal(xa) || has_prefix_in(xa, s)) gens.push_back(a);
    }
  }
  return gens;
}

void require_monomial(const QuotientAlgebra& r) {
  for (const NcPoly& f : r.presentation().relations)
    if (!f.is_monomial()) throw Error(ErrorCode::NonMonomialInput, "monomial relations required");
}

}  // namespace

FiltrationTable monomial_subset_filtration(const Presentation& pres, int check_degree) {
  return monomial_subset_filtration(std::make_shared<QuotientAlgebra>(pres, check_degree + 1), check_degree);
}

FiltrationTable monomial_subset_filtration(std::shared_ptr<const QuotientAlgebra> ring, int check_degree) {
  const Presentation& pres = ring->presentation();
  for (const NcPoly& f : pres.relations)
    if (!f.is_monomial() || f.degree() != 2)
      throw Error(ErrorCode::NonQuadraticMonomialInput, "subset filtrations need quadratic monomial relations");
  const std::size_t n = pres.num_generators();
  if (n > 16) throw Error(ErrorCode::SearchLimitExceeded, "too many generators for all subsets");
  FiltrationTable t;
  t.ring = ring;
  auto subset_words = [&](std::uint32_t mask) {
    std::vector<Word> ws;
    for (Letter g = 0; g < n; ++g)
      if (mask >> g & 1u) ws.push_back(Word{g});
    return ws;
  };
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    t.add_ideal(monomial_id(pres, subset_words(mask)), monomials(pres.field, subset_words(mask)));
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    Letter top = 0;
    for (Letter g = 0; g < n; ++g)
      if (mask >> g & 1u) top = g;
    const std::uint32_t parent = mask & ~(1u << top);
    std::vector<Word> colon = monomial_colon(*ring, Word{top}, subset_words(parent), check_degree);
    for (const Word& w : colon)
      if (w.degree() != 1)
        throw Error(ErrorCode::ColonNotSubsetGenerated,
                    "colon of " + pres.names[top] + " needs generator " + pres.render_word(w));
    t.add_entry(monomial_id(pres, subset_words(mask)), monomial_id(pres, subset_words(parent)),
                NcPoly::monomial(pres.field, Word{top}), monomial_id(pres, colon));
  }
  return t;
}

FiltrationTable monomial_rate_filtration(std::shared_ptr<const QuotientAlgebra> ring, int d, int check_degree) {
  require_monomial(*ring);
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "rate filtration degree must be positive");
  const Presentation& pres = ring->presentation();
  FiltrationTable t;
  t.ring = ring;
  t.kind = FiltrationKind::Rate;
  t.degree = d;

  std::vector<Word> top;
  for (Letter g = 0; g < pres.num_generators(); ++g) top.push_back(Word{g});
  std::vector<std::vector<Word>> pending{top};
  t.add_ideal("0", {});
  while (!pending.empty()) {
    std::vector<Word> gens = std::move(pending.back());
    pending.pop_back();
    std::sort(gens.begin(), gens.end());
    const std::string id = monomial_id(pres, gens);
    if (t.entries.contains(id) || gens.empty()) continue;
    t.add_ideal(id, monomials(pres.field, gens));
    // Drop the greatest generator; what remains stays a prefix antichain.
    Word x = gens.back();
    std::vector<Word> parent(gens.begin(), gens.end() - 1);
    std::vector<Word> colon = monomial_colon(*ring, x, parent, check_degree);
    for (const Word& w : colon)
      if (w.degree() > d)
        throw Error(ErrorCode::ColonNotSubsetGenerated,
                    "colon of " + pres.render_word(x) + " needs generator " + pres.render_word(w));
    t.add_entry(id, monomial_id(pres, parent), NcPoly::monomial(pres.field, x), monomial_id(pres, colon));
    pending.push_back(parent);
    pending.push_back(colon);
  }
  return t;
}

FlagTable flag_filtration(std::shared_ptr<const QuotientAlgebra> ring, const GenOrder& ord, int check_degree) {
  const Presentation& pres = ring->presentation();
  const std::size_t n = pres.num_generators();
  if (ord.size() != n) throw Error(ErrorCode::InvalidArgument, "order size differs from generator count");
  FlagTable out;
  FiltrationTable& t = out.table;
  t.ring = ring;
  std::vector<std::string> ids{"0"};
  std::vector<GradedIdeal> flag{GradedIdeal::zero(ring, check_degree)};
  std::vector<NcPoly> gens;
  t.add_ideal("0", {});
  for (std::size_t k = 0; k < n; ++k) {
    const Letter g = ord.ascending()[k];
    gens.push_back(NcPoly::monomial(pres.field, Word{g}));
    ids.push_back("I_" + std::to_string(k + 1));
    t.add_ideal(ids.back(), gens);
    flag.push_back(GradedIdeal::generated(ring, gens, check_degree));
  }
  for (std::size_t k = 1; k <= n; ++k) {
    const NcPoly& x = gens[k - 1];
    GradedIdeal colon = GradedIdeal::colon(x, flag[k - 1], check_degree);
    std::string colon_id;
    for (std::size_t m = 0; m <= n && colon_id.empty(); ++m)
      if (colon.equals(flag[m], check_degree)) colon_id = ids[m];
    if (colon_id.empty()) {
      out.missing.push_back(ids[k]);
      colon_id = "?";
    }
    t.add_entry(ids[k], ids[k - 1], x, colon_id);
  }
  return out;
}

FiltrationSeries hilbert_from_filtration(const FiltrationTable& table) {
  if (!table.ring) throw Error(ErrorCode::InvalidArgument, "filtration table without a ring");
  if (!table.truncated.empty())
    throw Error(ErrorCode::InvalidArgument, "a truncated table does not determine the series");
  const SpecialIds special = special_ids_from_gens(table);
  if (special.zero.empty() || special.maximal.empty())
    throw Error(ErrorCode::InvalidArgument, "table lacks the zero or the maximal ideal");

  std::map<std::string, std::size_t> var;
  for (const std::string& id : table.ids)
    if (id != special.zero) var.emplace(id, var.size());
  const std::size_t n = var.size();
  std::vector<std::vector<RationalFunction>> a(n, std::vector<RationalFunction>(n));
  std::vector<RationalFunction> b(n);
  const std::size_t top = var.at(special.maximal);
  for (const auto& [id, row] : var) {
    auto it = table.entries.find(id);
    if (it == table.entries.end()) throw Error(ErrorCode::InvalidArgument, id + ": entry missing");
    const FiltrationEntry& e = it->second;
    if (!table.ideals.contains(e.parent) || !table.ideals.contains(e.colon))
      throw Error(ErrorCode::InvalidArgument, id + ": unresolved parent or colon");
    const RationalFunction zc(Polynomial::monomial(1, e.x.degree()));
    // I - J + z^c N - z^c Rbar = z^c
    a[row][row] = a[row][row] + RationalFunction(Polynomial::constant(1));
    if (e.parent != special.zero) a[row][var.at(e.parent)] = a[row][var.at(e.parent)] - RationalFunction(Polynomial::constant(1));
    if (e.colon != special.zero) a[row][var.at(e.colon)] = a[row][var.at(e.colon)] + zc;
    a[row][top] = a[row][top] - zc;
    b[row] = zc;
  }
  std::vector<RationalFunction> h = solve_linear_system(std::move(a), std::move(b));

  FiltrationSeries out;
  out.algebra = h[top] + RationalFunction(Polynomial::constant(1));
  out.ideals[special.zero] = RationalFunction();
  std::vector<RationalFunction> distinct;
  for (const auto& [id, row] : var) {
    out.ideals[id] = h[row];
    if (!h[row].is_zero() && std::find(distinct.begin(), distinct.end(), h[row]) == distinct.end())
      distinct.push_back(h[row]);
  }
  out.distinct_nonzero = static_cast<int>(distinct.size());
  out.degree_bound = table.degree * out.distinct_nonzero;
  auto check = [&](const RationalFunction& f, const std::string& what) {
    if (f.numerator().degree() > out.degree_bound || f.denominator().degree() > out.degree_bound)
      throw Error(ErrorCode::InvariantViolation, what + " exceeds the degree bound " + std::to_string(out.degree_bound));
  };
  check(out.algebra, "R(z)");
  for (const auto& [id, f] : out.ideals) check(f, id);
  return out;
}

InitKoszulVerdict initially_koszul_criterion(const Presentation& pres, const GenOrder& ord) {
  const Presentation ordered = pres.with_order(ord);
  PbwVerdict pbw = pbw_certificate(ordered);
  InitKoszulVerdict v;
  if (!pbw.pbw) {
    v.reason = InitKoszulVerdict::Reason::NotPBW;
    v.pbw_witness = pbw.witness;
    return v;
  }
  std::set<Word> lms;  // in ranks
  for (const NcPoly& f : pbw.quadratic_basis) lms.insert(ord.to_ranks(leading_monomial(f, ord).first));
  for (const Word& w : lms) {
    for (Letter i = 0; i < w[1]; ++i) {
      if (!lms.contains(Word{w[0], i})) {
        v.reason = InitKoszulVerdict::Reason::Segment;
        v.k = w[0] + 1;
        v.j = w[1] + 1;
        v.i = i + 1;
        return v;
      }
    }
  }
  v.yes = true;
  return v;
}

SearchResult initially_koszul_search(const Presentation& pres, std::size_t limit) {
  const std::size_t n = pres.num_generators();
  if (n > limit)
    throw Error(ErrorCode::SearchLimitExceeded,
                std::to_string(n) + " generators exceed the search limit " + std::to_string(limit));
  if (!pres.all_quadratic()) throw Error(ErrorCode::NonQuadraticInput, "search needs quadratic relations");
  std::vector<bool> idle(n, true);
  for (const NcPoly& f : pres.relations)
    for (const auto& [w, c] : f.terms())
      for (Letter l : w.letters()) idle[l] = false;

  std::vector<Letter> perm(n);
  std::iota(perm.begin(), perm.end(), Letter{0});
  SearchResult res;
  do {
    // Generators in no relation are interchangeable: keep them in index order.
    Letter last = 0;
    bool first = true, canonical = true;
    for (Letter g : perm) {
      if (!idle[g]) continue;
      if (!first && g < last) canonical = false;
      last = g;
      first = false;
    }
    if (!canonical) continue;
    ++res.tried;
    GenOrder ord(perm);
    if (initially_koszul_criterion(pres, ord).yes) {
      res.found = true;
      res.order = ord;
      return res;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return res;
}

bool monomial_dual_flag_check(const Presentation& pres, const GenOrder& ord) {
  for (const NcPoly& f : pres.relations)
    if (!f.is_monomial() || f.degree() != 2)
      throw Error(ErrorCode::NonQuadraticMonomialInput, "dual flag check needs quadratic monomial relations");
  const Presentation dual = quadratic_dual(pres.with_order(ord));
  return initially_koszul_criterion(dual, ord.reversed()).yes;
}

// ---------------------------------------------------------------------------
// Single-relation normal form

namespace {

using Vec = std::vector<Scalar>;

std::optional<Scalar> field_sqrt(const Scalar& a) {
  const FieldSpec f = a.field();
  if (a.is_zero()) return a;
  if (!f.is_prime()) {
    mpq_class q = a.to_rational();
    if (q < 0) return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return f.from_rational(mpq_class(rn, rd));
  }
  // Tonelli-Shanks.
  const std::uint64_t p = f.characteristic();
  const std::uint64_t v = a.to_rational().get_num().get_ui();
  auto pw = [p](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= p;
    for (; e; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return r;
  };
  if (p == 2) return a;
  if (pw(v, (p - 1) / 2) != 1) return std::nullopt;
  std::uint64_t q = p - 1, s = 0;
  while (q % 2 == 0) q /= 2, ++s;
  std::uint64_t z = 2;
  while (pw(z, (p - 1) / 2) != p - 1) ++z;
  std::uint64_t m = s, c = pw(z, q), t = pw(v, q), r = pw(v, (q + 1) / 2);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) tt = tt * tt % p, ++i;
    std::uint64_t b = pw(c, std::uint64_t{1} << (m - i - 1));
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return f.from_int(static_cast<long>(r));
}

Scalar bilinear(const Matrix& q, const Vec& u, const Vec& v) {
  Scalar s = q.field().zero();
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j)
      if (!q(i, j).is_zero()) s += u[i] * q(i, j) * v[j];
  return s;
}

Vec left_row(const Matrix& q, const Vec& u) {
  Vec r(q.cols(), q.field().zero());
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) r[j] += u[i] * q(i, j);
  return r;
}

Vec basis_vector(const FieldSpec& f, std::size_t n, std::size_t i) {
  Vec v(n, f.zero());
  v[i] = f.one();
  return v;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

// Extends the given independent vectors to a basis of k^n by unit vectors.
std::vector<Vec> complete_basis(const FieldSpec& f, std::size_t n, std::vector<Vec> vs) {
  auto rank = [&](const std::vector<Vec>& rows) {
    Matrix m(f, rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    return m.rank();
  };
  for (std::size_t i = 0; i < n && vs.size() < n; ++i) {
    vs.push_back(basis_vector(f, n, i));
    if (rank(vs) < vs.size()) vs.pop_back();
  }
  return vs;
}

// M whose column b is cols[b].
Matrix from_columns(const FieldSpec& f, const std::vector<Vec>& cols) {
  const std::size_t n = cols.size();
  Matrix m(f, n, n);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t i = 0; i < n; ++i) m(i, b) = cols[b][i];
  return m;
}

// Kernel of the row vector r (as columns), with `first` listed last.
std::vector<Vec> kernel_basis_with(const FieldSpec& f, const Vec& r, const Vec& first) {
  const std::size_t n = r.size();
  std::size_t piv = 0;
  while (r[piv].is_zero()) ++piv;
  std::vector<Vec> ker;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == piv) continue;
    Vec v = basis_vector(f, n, j);
    v[piv] = -(r[j] / r[piv]);
    ker.push_back(std::move(v));
  }
  // Swap `first` into the kernel basis in place of a vector it depends on.
  std::vector<Vec> out{first};
  for (const Vec& k : ker) {
    std::vector<Vec> trial = out;
    trial.push_back(k);
    Matrix m(f, trial.size(), n);
    for (std::size_t i = 0; i < trial.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = trial[i][j];
    if (m.rank() == trial.size()) out = std::move(trial);
  }
  std::rotate(out.begin(), out.begin() + 1, out.end());
  return out;  // n - 1 vectors, `first` last
}

}  // namespace

SingleRelationForm single_relation_normalize(const NcPoly& f, std::size_t n) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "relation is zero");
  if (!f.is_homogeneous() || f.degree() != 2) throw Error(ErrorCode::NotQuadratic, "relation is not quadratic");
  const FieldSpec field = f.field();
  Matrix q(field, n, n);
  for (const auto& [w, c] : f.terms()) {
    if (w[0] >= n || w[1] >= n) throw Error(ErrorCode::InvalidArgument, "letter outside the generator range");
    q(w[0], w[1]) = c;
  }
  SingleRelationForm out;
  auto finish = [&](Matrix m, SingleRelationForm::Form form) {
    out.change = m;
    out.form = form;
    out.transformed = apply_linear_change(f, m);
    const Word expected = form == SingleRelationForm::Form::XnX1 ? Word{static_cast<Letter>(n - 1), 0} : Word{0, 0};
    if (leading_monomial(out.transformed, GenOrder::identity(n)).first != expected)
      throw Error(ErrorCode::InvariantViolation, "normalization missed its target form");
    out.supported = true;
    return out;
  };

  // Factorizable f = l_u l_v (rank one).
  if (q.rank() == 1) {
    std::size_t r0 = 0, c0 = 0;
    while ([&] {
      for (c0 = 0; c0 < n; ++c0)
        if (!q(r0, c0).is_zero()) return false;
      return true;
    }())
      ++r0;
    Vec u(n), v(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = q(i, c0) / q(r0, c0);
    for (std::size_t j = 0; j < n; ++j) v[j] = q(r0, j);
    // Want P u = e_n and P v = e_1 (or P u = e_1 when v is proportional).
    Matrix uv(field, 2, n);
    for (std::size_t j = 0; j < n; ++j) uv(0, j) = u[j], uv(1, j) = v[j];
    std::vector<Vec> cols;
    SingleRelationForm::Form form;
    if (n >= 2 && uv.rank() == 2) {
      std::vector<Vec> basis = complete_basis(field, n, {v, u});
      cols.push_back(v);
      for (std::size_t i = 2; i < n; ++i) cols.push_back(basis[i]);
      cols.push_back(u);
      form = SingleRelationForm::Form::XnX1;
    } else {
      cols = complete_basis(field, n, {u});
      form = SingleRelationForm::Form::X1Squared;
    }
    // B has the chosen basis as columns; P = B^{-1}, M = P^T.
    return finish(from_columns(field, cols).inverse().transpose(), form);
  }

  // Isotropic m (m^T Q m = 0) with r = m^T Q nonzero.
  std::vector<Vec> candidates;
  for (std::size_t i = 0; i < n; ++i) candidates.push_back(basis_vector(field, n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      // q(e_i + t e_j) = Q_ii + t (Q_ij + Q_ji) + t^2 Q_jj
      const Scalar a = q(j, j), b = q(i, j) + q(j, i), c = q(i, i);
      std::vector<Scalar> roots;
      if (a.is_zero()) {
        if (!b.is_zero()) roots.push_back(-(c / b));
      } else if (field.is_prime() && field.characteristic() == 2) {
        for (long t = 0; t < 2; ++t) {
          Scalar ts = field.from_int(t);
          if ((a * ts * ts + b * ts + c).is_zero()) roots.push_back(ts);
        }
      } else if (auto s = field_sqrt(b * b - field.from_int(4) * a * c)) {
        const Scalar two_a = field.from_int(2) * a;
        roots.push_back((-b + *s) / two_a);
        roots.push_back((-b - *s) / two_a);
      }
      for (const Scalar& t : roots) {
        Vec v = basis_vector(field, n, i);
        v[j] = t;
        candidates.push_back(std::move(v));
      }
    }
  for (const Vec& m : candidates) {
    if (!bilinear(q, m, m).is_zero()) continue;
    const Vec r = left_row(q, m);
    if (is_zero_vec(r)) continue;
    std::size_t piv = 0;
    while (r[piv].is_zero()) ++piv;
    Vec m1 = basis_vector(field, n, piv);
    m1[piv] = r[piv].inverse();
    std::vector<Vec> cols{m1};
    for (Vec& k : kernel_basis_with(field, r, m)) cols.push_back(std::move(k));
    return finish(from_columns(field, cols), SingleRelationForm::Form::XnX1);
  }
  return out;
}

}  // namespace koszulkit
