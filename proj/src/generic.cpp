#include "koszulkit/generic.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "koszulkit/error.hpp"

namespace koszulkit {

GenericPresentation random_quadratic_presentation(std::size_t n, std::size_t r, std::uint64_t p,
                                                  std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "need at least one generator");
  if (r > n * n) throw Error(ErrorCode::InvalidArgument, "more relations than quadratic monomials");
  const FieldSpec field = FieldSpec::prime(p);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);

  GenericPresentation out;
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  std::vector<NcPoly> relations;
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<NcPoly> ls;
    NcPoly f(field);
    for (Letter i = 0; i < n; ++i) {
      NcPoly l(field);
      for (Letter k = 0; k < n; ++k) {
        Scalar c = field.from_int(static_cast<long>(coef(rng)));
        l.add_term(Word{k}, c);
        f.add_term(Word{i, k}, c);
      }
      ls.push_back(std::move(l));
    }
    out.left_factors.push_back(std::move(ls));
    // A zero draw is astronomically unlikely but would break validation.
    if (f.is_zero()) f.add_term(Word{0, 0}, field.one());
    relations.push_back(std::move(f));
  }
  out.pres = Presentation::make(std::move(names), field, std::move(relations));
  return out;
}

TruncatedSeries golod_shafarevich_series(long n, long r, int max_degree) {
  return RationalFunction(Polynomial{1}, Polynomial{1, -n, r}).expand(max_degree);
}

bool GenericExperimentReport::ok() const {
  return !genericity_failure &&
         std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

bool GenericExperimentReport::check(const std::string& name) const {
  for (const auto& [k, v] : checks)
    if (k == name) return v;
  throw Error(ErrorCode::InvalidArgument, "no check named " + name);
}

namespace {

void record(GenericExperimentReport& rep, const std::string& name, bool value) {
  rep.checks.emplace_back(name, value);
  if (!value) rep.log.push_back("check failed: " + name);
}

NcPoly generator(const FieldSpec& f, std::size_t i) { return NcPoly::monomial(f, Word{static_cast<Letter>(i)}); }

}  // namespace

GenericExperimentReport small_r_experiment(std::size_t n, std::size_t r, std::uint64_t p, std::uint64_t seed,
                                           int max_degree, int i_max) {
  if (r >= n) throw Error(ErrorCode::InvalidArgument, "the finite construction needs r < n");
  if (max_degree < 2) throw Error(ErrorCode::InvalidArgument, "degree bound must be at least 2");
  GenericExperimentReport rep;
  rep.n = n, rep.r = r, rep.p = p, rep.seed = seed;
  rep.max_degree = max_degree;
  rep.hom_bound = i_max;

  GenericPresentation gp = random_quadratic_presentation(n, r, p, seed);
  const FieldSpec& f = gp.pres.field;
  auto ring = std::make_shared<const QuotientAlgebra>(gp.pres, std::max(max_degree + 1, i_max + 2));

  rep.hilbert = ring->hilbert_function(max_degree);
  rep.expected = golod_shafarevich_series(static_cast<long>(n), static_cast<long>(r), max_degree);
  const bool hilbert_ok = rep.hilbert == rep.expected;
  record(rep, "hilbert", hilbert_ok);
  if (!hilbert_ok) {
    rep.genericity_failure = true;
    rep.log.push_back("GenericityFailure: Hilbert prefix " + rep.hilbert.to_string() + " differs from " +
                      rep.expected.to_string());
  }

  // The flag and the J-chain of right factors of x_n.
  std::vector<NcPoly> ls;
  for (std::size_t j = 0; j < r; ++j) ls.push_back(gp.left_factors[j][n - 1]);
  std::vector<GradedIdeal> flag{GradedIdeal::zero(ring, max_degree)};
  std::vector<GradedIdeal> chain{GradedIdeal::zero(ring, max_degree)};
  std::vector<NcPoly> gens;
  for (std::size_t t = 1; t <= n; ++t) {
    gens.push_back(generator(f, t - 1));
    flag.push_back(GradedIdeal::generated(ring, gens, max_degree));
  }
  std::vector<NcPoly> lgens;
  for (std::size_t t = 1; t <= r; ++t) {
    lgens.push_back(ls[t - 1]);
    chain.push_back(GradedIdeal::generated(ring, lgens, max_degree));
    if (chain.back().dim(1) != t) {
      rep.genericity_failure = true;
      rep.log.push_back("GenericityFailure: right factors of x_n are dependent");
    }
  }

  bool table_ok = true;
  for (std::size_t t = 1; t <= n; ++t) {
    GradedIdeal colon = GradedIdeal::colon(generator(f, t - 1), flag[t - 1], max_degree);
    const bool good = t < n ? colon.is_zero_to(max_degree) : colon.equals(chain[r], max_degree);
    if (!good) rep.log.push_back("colon of x" + std::to_string(t) + " does not match the table");
    table_ok = table_ok && good;
  }
  for (std::size_t t = 1; t <= r; ++t) {
    GradedIdeal colon = GradedIdeal::colon(ls[t - 1], chain[t - 1], max_degree);
    const bool good = colon.is_zero_to(max_degree);
    if (!good) rep.log.push_back("colon of l_" + std::to_string(t) + " is nonzero");
    table_ok = table_ok && good;
  }
  record(rep, "colon_table", table_ok);

  FiltrationTable t;
  t.ring = ring;
  t.add_ideal("0", {});
  gens.clear();
  for (std::size_t k = 1; k <= n; ++k) {
    gens.push_back(generator(f, k - 1));
    t.add_ideal("I_" + std::to_string(k), gens);
  }
  lgens.clear();
  for (std::size_t k = 1; k <= r; ++k) {
    lgens.push_back(ls[k - 1]);
    t.add_ideal("J_" + std::to_string(k), lgens);
  }
  auto flag_id = [](std::size_t k) { return k == 0 ? std::string("0") : "I_" + std::to_string(k); };
  auto chain_id = [](std::size_t k) { return k == 0 ? std::string("0") : "J_" + std::to_string(k); };
  for (std::size_t k = 1; k <= n; ++k)
    t.add_entry(flag_id(k), flag_id(k - 1), generator(f, k - 1), k < n ? "0" : chain_id(r));
  for (std::size_t k = 1; k <= r; ++k) t.add_entry(chain_id(k), chain_id(k - 1), ls[k - 1], "0");

  VerificationReport v = verify_filtration(t, max_degree, i_max);
  record(rep, "filtration", v.valid);
  for (const std::string& s : v.violations) rep.log.push_back(s);

  if (v.valid) {
    FiltrationSeries s = hilbert_from_filtration(t);
    record(rep, "rational_series",
           s.algebra == RationalFunction(Polynomial{1}, Polynomial{1, -static_cast<long>(n), static_cast<long>(r)}));
  }
  rep.table = std::move(t);
  rep.verification = std::move(v);
  return rep;
}

GenericExperimentReport large_r_experiment(std::size_t n, std::size_t r, std::uint64_t p, std::uint64_t seed,
                                           int steps, int max_degree, int i_max) {
  if (r <= n * n - n || r > n * n) throw Error(ErrorCode::InvalidArgument, "the annihilator construction needs n^2 - n < r <= n^2");
  if (steps < 0) throw Error(ErrorCode::InvalidArgument, "negative step budget");
  if (max_degree < 3) throw Error(ErrorCode::InvalidArgument, "degree bound must be at least 3");
  GenericExperimentReport rep;
  rep.n = n, rep.r = r, rep.p = p, rep.seed = seed;
  rep.max_degree = max_degree;
  rep.hom_bound = i_max;

  GenericPresentation gp = random_quadratic_presentation(n, r, p, seed);
  const FieldSpec& f = gp.pres.field;
  auto ring = std::make_shared<const QuotientAlgebra>(gp.pres, std::max(max_degree + 1, i_max + 2));
  const std::size_t s = n * n - r;

  rep.hilbert = ring->hilbert_function(max_degree);
  rep.expected = TruncatedSeries(max_degree);
  rep.expected[0] = 1;
  rep.expected[1] = static_cast<long>(n);
  rep.expected[2] = static_cast<long>(s);
  const bool dims_ok = rep.hilbert == rep.expected;
  record(rep, "dimensions", dims_ok);
  if (!dims_ok) {
    rep.genericity_failure = true;
    rep.log.push_back("GenericityFailure: expected dim R_2 = " + std::to_string(s) + " and R_3 = 0, got " +
                      rep.hilbert.to_string());
  }

  FiltrationTable t;
  t.ring = ring;
  std::map<std::string, GradedIdeal> built;
  auto lookup = [&](const GradedIdeal& ideal) -> std::string {
    for (const std::string& id : t.ids)
      if (built.at(id).equals(ideal, max_degree)) return id;
    return {};
  };
  // Returns the id of gens * R, adding it under `fresh` if it is new.
  auto member = [&](const std::string& fresh, const std::vector<NcPoly>& gens) {
    GradedIdeal ideal = GradedIdeal::generated(ring, gens, max_degree);
    std::string id = lookup(ideal);
    if (!id.empty()) return id;
    t.add_ideal(fresh, gens);
    built.emplace(fresh, std::move(ideal));
    return fresh;
  };
  member("0", {});
  std::vector<NcPoly> xs;
  for (std::size_t i = 0; i < n; ++i) xs.push_back(generator(f, i));
  const std::string top = member("R+", xs);

  // The flag of `forms`; colons past the first are computed and looked up.
  // Returns the id of forms[0] R when its colon is still to be filled in.
  bool colons_ok = true;
  auto add_flag = [&](const std::string& prefix, const std::vector<NcPoly>& forms) -> std::string {
    std::vector<NcPoly> gens;
    std::string prev = "0", open;
    for (std::size_t k = 1; k <= forms.size(); ++k) {
      gens.push_back(forms[k - 1]);
      const std::string id = member(prefix + std::to_string(k), gens);
      if (t.entries.contains(id) || id == prev) {
        prev = id;
        continue;
      }
      std::string colon;
      if (k == 1) {
        open = id;
      } else {
        colon = lookup(GradedIdeal::colon(forms[k - 1], built.at(prev), max_degree));
        if (colon != top) {
          colons_ok = false;
          rep.log.push_back(id + ": colon is not the maximal ideal");
          if (colon.empty()) colon = "?";
        }
      }
      t.add_entry(id, prev, forms[k - 1], colon);
      prev = id;
    }
    return open;
  };

  std::string open = add_flag("I_", xs);
  record(rep, "flag_colons", colons_ok);

  bool ann_ok = true;
  NcPoly x = xs[0];
  for (int k = 1; k <= steps && !open.empty(); ++k) {
    GradedIdeal ann = GradedIdeal::colon(x, built.at("0"), max_degree);
    MinGenerators mg = ann.min_generators(max_degree);
    if (!(mg.counts.size() == 1 && mg.counts[0].first == 1 && mg.counts[0].second == n - s)) {
      ann_ok = false;
      rep.genericity_failure = true;
      rep.log.push_back("GenericityFailure: annihilator of round " + std::to_string(k) + " is not generated by " +
                        std::to_string(n - s) + " linear forms");
      break;
    }
    if (std::string known = lookup(ann); !known.empty()) {
      t.entries.at(open).colon = known;
      rep.log.push_back("round " + std::to_string(k) + ": annihilator is " + known + ", table closes");
      open.clear();
      break;
    }
    std::vector<NcPoly> forms;
    for (const SparseVector& row : ann.component(1).rows()) forms.push_back(ring->element(1, row));
    const std::string next = add_flag("A" + std::to_string(k) + "_", forms);
    t.entries.at(open).colon = lookup(ann);
    open = next;
    x = forms[0];
  }
  record(rep, "annihilators", ann_ok);
  record(rep, "later_colons", colons_ok);
  if (!open.empty()) {
    t.truncated.insert(open);
    rep.log.push_back(open + ": colon left open at the step budget");
  }

  VerificationReport v = verify_filtration(t, max_degree, i_max);
  record(rep, "filtration", v.valid);
  for (const std::string& msg : v.violations) rep.log.push_back(msg);
  rep.table = std::move(t);
  rep.verification = std::move(v);
  return rep;
}

H1Obstruction h1_obstruction_series(long n, long r) {
  if (n < 1 || r < 0) throw Error(ErrorCode::InvalidArgument, "need n >= 1 and r >= 0");
  H1Obstruction out;
  out.q = r / n;
  out.p = r % n;
  if (out.q >= n) throw Error(ErrorCode::InvalidArgument, "the flag recursion needs r < n^2");
  const RationalFunction one(Polynomial{1});
  const RationalFunction z(Polynomial{0, 1});
  const RationalFunction R(Polynomial{1}, Polynomial{1, -n, r});
  const RationalFunction rbar = R - one;

  // I_t = a + b X with X = I_p(z) unknown; N_t is 0 below the slot
  // n - q, X at it, and R+ above it.
  RationalFunction a, b;
  const long slot = n - out.q;
  for (long t = 1; t <= n; ++t) {
    if (t < slot) {
      a = a + z * R;
    } else if (t == slot) {
      a = a + z * R;
      b = b - z;
    } else {
      a = a + z * (R - rbar);
    }
  }
  // a + b X = R - 1, with b = -z.
  RationalFunction rhs = rbar - a;
  auto [quot, rem] = Polynomial::divmod(rhs.numerator(), Polynomial{0, -1});
  if (!rem.is_zero()) throw Error(ErrorCode::InvariantViolation, "flag recursion is not divisible by z");
  const RationalFunction ip(quot, rhs.denominator());
  RationalFunction h1 = RationalFunction(Polynomial{0, out.p}) - ip * RationalFunction(Polynomial{1, -n, r});
  if (!h1.is_polynomial()) throw Error(ErrorCode::InvariantViolation, "H_1 series is not a polynomial");
  out.series = h1.numerator();
  for (const Rational& c : out.series.coefficients())
    if (c < 0) out.negative = true;
  return out;
}

}  // namespace koszulkit
