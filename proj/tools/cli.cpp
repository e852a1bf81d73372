#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "koszulkit/error.hpp"
#include "koszulkit/generic.hpp"

namespace koszulkit::cli {

using nlohmann::ordered_json;

namespace {

constexpr int kDefaultBound = 8;
constexpr int kDefaultHomBound = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string order_text(const Presentation& pres, const GenOrder& ord) {
  std::vector<std::string> parts;
  for (Letter g : ord.ascending()) parts.push_back(pres.names[g]);
  return join(parts, "<");
}

ordered_json order_json(const Presentation& pres, const GenOrder& ord) {
  ordered_json a = ordered_json::array();
  for (Letter g : ord.ascending()) a.push_back(pres.names[g]);
  return a;
}

std::string rational_text(const Rational& q) { return q.get_str(); }

/// Integer-valued series as JSON numbers, anything else as strings.
ordered_json series_json(const TruncatedSeries& s) {
  ordered_json a = ordered_json::array();
  for (const auto& c : s.coefficients()) {
    if (c.get_den() == 1 && c.get_num().fits_slong_p())
      a.push_back(c.get_num().get_si());
    else
      a.push_back(c.get_str());
  }
  return a;
}

ordered_json verdict_json(const KoszulVerdict& v) {
  ordered_json j;
  j["koszul"] = v.koszul;
  j["i_max"] = v.i_max;
  j["j_max"] = v.j_max;
  j["generation_degree"] = v.d;
  if (!v.koszul) j["witness"] = {{"i", v.i}, {"j", v.j}, {"dim", v.dim}};
  return j;
}

std::string verdict_text(const KoszulVerdict& v) {
  if (v.koszul)
    return "KoszulToBound (i_max = " + std::to_string(v.i_max) + ", j_max = " + std::to_string(v.j_max) + ")";
  return "NotKoszul: H_" + std::to_string(v.i) + " has dimension " + std::to_string(v.dim) + " in degree " +
         std::to_string(v.j);
}

ordered_json tor_json(const TorTable& t) {
  ordered_json j;
  j["module"] = t.module;
  j["i_max"] = t.i_max;
  j["j_max"] = t.j_max;
  ordered_json entries = ordered_json::array();
  for (const auto& [key, dim] : t.dims) entries.push_back({{"i", key.first}, {"j", key.second}, {"dim", dim}});
  j["entries"] = entries;
  return j;
}

ordered_json report_json(const VerificationReport& r) {
  ordered_json j;
  j["valid"] = r.valid;
  j["internal_bound"] = r.internal_bound;
  j["hom_bound"] = r.hom_bound;
  j["violations"] = r.violations;
  j["notes"] = r.notes;
  j["flag_chain"] = r.flag_chain;
  ordered_json certs = ordered_json::object();
  for (const auto& [id, v] : r.certificates) certs[id] = verdict_json(v);
  j["certificates"] = certs;
  ordered_json gens = ordered_json::object();
  for (const auto& [id, m] : r.generator_degree) gens[id] = m;
  j["generator_degree"] = gens;
  return j;
}

void report_text(const VerificationReport& r, std::ostream& out) {
  out << "filtration: " << (r.valid ? "valid" : "invalid") << " (bound " << r.internal_bound << ", hom-bound "
      << r.hom_bound << ")\n";
  for (const auto& v : r.violations) out << "  violation: " << v << "\n";
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  if (!r.flag_chain.empty()) out << "  flag: " << join(r.flag_chain, " < ") << "\n";
  for (const auto& [id, v] : r.certificates) out << "  " << id << ": " << verdict_text(v) << "\n";
}

/// Ring with a Groebner basis good enough for filtration checks.
std::shared_ptr<const QuotientAlgebra> filtration_ring(const Presentation& pres, int bound, int hom_bound) {
  return std::make_shared<const QuotientAlgebra>(pres, std::max(bound + 1, hom_bound + 2));
}

struct Context {
  std::ostream& out;
  bool json = false;
};

int emit(Context& ctx, const ordered_json& j, const std::string& text, int code) {
  if (ctx.json)
    ctx.out << j.dump(2) << "\n";
  else
    ctx.out << text;
  return code;
}

// ---- subcommands ----------------------------------------------------------

int cmd_gb(Context& ctx, const Presentation& pres, int bound) {
  const GroebnerBasis gb = groebner_complete(pres, bound);
  ordered_json j;
  j["command"] = "gb";
  j["bound"] = bound;
  j["order"] = order_json(pres, pres.order);
  j["complete"] = gb.complete();
  ordered_json els = ordered_json::array();
  for (const auto& g : gb.elements()) els.push_back(pres.render_poly(g));
  j["elements"] = els;
  return emit(ctx, j, gb.render(pres), 0);
}

int cmd_pbw(Context& ctx, const Presentation& pres) {
  const PbwVerdict v = pbw_certificate(pres);
  ordered_json j;
  j["command"] = "pbw";
  j["order"] = order_json(pres, pres.order);
  j["pbw"] = v.pbw;
  if (v.witness) j["witness"] = pres.render_word(*v.witness);
  ordered_json basis = ordered_json::array();
  for (const auto& f : v.quadratic_basis) basis.push_back(pres.render_poly(f));
  j["quadratic_basis"] = basis;
  std::string text = "order: " + order_text(pres, pres.order) + "\n";
  text += v.pbw ? "PBW\n" : "NotPBW: witness " + pres.render_word(*v.witness) + "\n";
  return emit(ctx, j, text, v.pbw ? 0 : 1);
}

int cmd_hilbert(Context& ctx, const Presentation& pres, int max_degree, bool ratfunc) {
  ordered_json j;
  j["command"] = "hilbert";
  j["max_degree"] = max_degree;
  std::string text;
  if (ratfunc) {
    const RationalFunction f = pres.all_monomial() ? monomial_hilbert_ratfunc(pres)
                                                   : hilbert_ratfunc(QuotientAlgebra(pres, max_degree));
    const TruncatedSeries s = f.expand(max_degree);
    j["series"] = series_json(s);
    j["ratfunc"] = f.to_string();
    text = s.to_string() + "\n" + f.to_string() + "\n";
  } else {
    const QuotientAlgebra q(pres, max_degree);
    const TruncatedSeries s = q.hilbert_function(max_degree);
    j["series"] = series_json(s);
    text = s.to_string() + "\n";
  }
  return emit(ctx, j, text, 0);
}

int cmd_dual(Context& ctx, const Presentation& pres) {
  const Presentation d = quadratic_dual(pres);
  ordered_json j;
  j["command"] = "dual";
  j["generators"] = d.names;
  j["order"] = order_json(d, d.order);
  ordered_json rels = ordered_json::array();
  for (const auto& f : d.relations) rels.push_back(d.render_poly(f));
  j["relations"] = rels;
  j["presentation"] = d.render();
  return emit(ctx, j, d.render(), 0);
}

int cmd_froberg(Context& ctx, const Presentation& pres, int max_degree) {
  const TruncatedSeries r = froberg_check(pres, max_degree);
  ordered_json j;
  j["command"] = "froberg";
  j["max_degree"] = max_degree;
  j["residual"] = series_json(r);
  j["zero"] = r.is_zero();
  std::string text = "residual to degree " + std::to_string(max_degree) + ": " + r.to_string() + "\n";
  text += r.is_zero() ? "zero\n" : "nonzero\n";
  return emit(ctx, j, text, r.is_zero() ? 0 : 1);
}

int cmd_koszul(Context& ctx, const Presentation& pres, int hom_bound, int bound, const std::string& module) {
  ordered_json j;
  j["command"] = "koszul";
  j["hom_bound"] = hom_bound;
  KoszulVerdict v;
  std::string name = "k";
  if (module.empty()) {
    const int gb_bound = std::max(bound, hom_bound + 2);
    j["bound"] = gb_bound;
    auto ring = std::make_shared<const QuotientAlgebra>(pres, gb_bound);
    v = koszul_certificate_trivial(ring, hom_bound);
  } else {
    const auto gens = parse_ideal_generators(read_file(module), pres);
    int top = 0;
    for (const auto& g : gens) top = std::max(top, g.degree());
    const int gb_bound = std::max(bound, top + hom_bound + 2);
    j["bound"] = gb_bound;
    auto ring = std::make_shared<const QuotientAlgebra>(pres, gb_bound);
    std::vector<std::string> shown;
    for (const auto& g : gens) shown.push_back(pres.render_poly(g));
    name = "(" + join(shown, ", ") + ")";
    v = koszul_certificate(ideal_from_generators(ring, gens, top), hom_bound);
  }
  j["module"] = name;
  j["verdict"] = verdict_json(v);
  const std::string text = "module " + name + ": " + verdict_text(v) + "\n";
  return emit(ctx, j, text, v.koszul ? 0 : 1);
}

int cmd_rate(Context& ctx, const Presentation& pres, int hom_bound, int bound) {
  auto ring = std::make_shared<const QuotientAlgebra>(pres, bound);
  const TorTable t = tor_table_trivial(ring, hom_bound, bound);
  const Rational rate = rate_estimate(t);
  ordered_json j;
  j["command"] = "rate";
  j["hom_bound"] = hom_bound;
  j["bound"] = bound;
  j["rate"] = rational_text(rate);
  ordered_json tops = ordered_json::array();
  for (int i = 0; i <= hom_bound; ++i) tops.push_back(t.top_degree(i));
  j["top_degrees"] = tops;
  j["tor"] = tor_json(t);
  std::string text = t.betti_diagram();
  if (!text.empty() && text.back() != '\n') text += "\n";
  text += "rate estimate: " + rational_text(rate) + " (hom-bound " + std::to_string(hom_bound) + ", bound " +
          std::to_string(bound) + ")\n";
  return emit(ctx, j, text, 0);
}

int cmd_anick(Context& ctx, const Presentation& pres, int hom_bound) {
  const auto chains = anick_chains_quadratic_monomial(pres, hom_bound);
  auto ring = std::make_shared<const QuotientAlgebra>(pres, hom_bound + 1);
  const TorTable t = tor_table_trivial(ring, hom_bound, hom_bound + 1);
  ordered_json j;
  j["command"] = "anick";
  j["hom_bound"] = hom_bound;
  ordered_json rows = ordered_json::array();
  std::string text;
  bool agree = true;
  for (int i = 0; i <= hom_bound; ++i) {
    const std::size_t count = chains[static_cast<std::size_t>(i)].size();
    const std::size_t tor = t.dim(i, i);
    agree = agree && count == tor;
    ordered_json words = ordered_json::array();
    for (const auto& w : chains[static_cast<std::size_t>(i)]) words.push_back(w.empty() ? "1" : pres.render_word(w));
    rows.push_back({{"i", i}, {"chains", count}, {"tor", tor}, {"words", words}});
    text += "Ch_" + std::to_string(i) + " = " + std::to_string(count) + ", Tor_" + std::to_string(i) + " = " +
            std::to_string(tor) + "\n";
  }
  j["rows"] = rows;
  j["agree"] = agree;
  text += agree ? "chain counts agree with the resolution\n" : "chain counts disagree with the resolution\n";
  return emit(ctx, j, text, agree ? 0 : 1);
}

int cmd_filtration_verify(Context& ctx, const Presentation& pres, const std::string& file, int bound, int hom_bound) {
  auto ring = filtration_ring(pres, bound, hom_bound);
  const FiltrationTable table = filtration_from_json(ordered_json::parse(read_file(file)), ring);
  const VerificationReport r = verify_filtration(table, bound, hom_bound);
  ordered_json j;
  j["command"] = "filtration verify";
  j["bound"] = bound;
  j["hom_bound"] = hom_bound;
  j["verification"] = report_json(r);
  std::ostringstream text;
  report_text(r, text);
  return emit(ctx, j, text.str(), r.valid ? 0 : 1);
}

int cmd_filtration_monomial(Context& ctx, const Presentation& pres, int bound, int hom_bound, int rate_degree) {
  auto ring = filtration_ring(pres, bound, hom_bound);
  const FiltrationTable table = rate_degree > 0 ? monomial_rate_filtration(ring, rate_degree, bound)
                                                : monomial_subset_filtration(ring, bound);
  const VerificationReport r = verify_filtration(table, bound, hom_bound);
  ordered_json j = filtration_to_json(table);
  j["bound"] = bound;
  j["hom_bound"] = hom_bound;
  j["verification"] = report_json(r);
  std::ostringstream text;
  for (const auto& id : table.ids) {
    text << id;
    auto e = table.entries.find(id);
    if (e != table.entries.end())
      text << " = " << e->second.parent << " + " << pres.render_poly(e->second.x) << " R, colon "
           << e->second.colon;
    text << "\n";
  }
  report_text(r, text);
  return emit(ctx, j, text.str(), r.valid ? 0 : 1);
}

int cmd_filtration_hilbert(Context& ctx, const Presentation& pres, const std::string& file, int bound) {
  auto ring = std::make_shared<const QuotientAlgebra>(pres, bound);
  const FiltrationTable table = filtration_from_json(ordered_json::parse(read_file(file)), ring);
  // The solver trusts the table, so the closure conditions are checked first.
  const VerificationReport r = verify_filtration(table, bound, 0);
  ordered_json j;
  j["command"] = "filtration hilbert";
  j["bound"] = bound;
  if (!r.valid) {
    j["verification"] = report_json(r);
    std::ostringstream text;
    report_text(r, text);
    return emit(ctx, j, text.str(), 1);
  }
  const FiltrationSeries fs = hilbert_from_filtration(table);
  j["algebra"] = fs.algebra.to_string();
  j["expansion"] = series_json(fs.algebra.expand(bound));
  ordered_json ideals = ordered_json::object();
  for (const auto& id : table.ids) ideals[id] = fs.ideals.at(id).to_string();
  j["ideals"] = ideals;
  j["distinct_nonzero"] = fs.distinct_nonzero;
  j["degree_bound"] = fs.degree_bound;
  std::string text = "R(z) = " + fs.algebra.to_string() + "\n";
  text += "expansion: " + fs.algebra.expand(bound).to_string() + "\n";
  for (const auto& id : table.ids) text += id + ": " + fs.ideals.at(id).to_string() + "\n";
  text += "degree bound d*s = " + std::to_string(fs.degree_bound) + "\n";
  return emit(ctx, j, text, 0);
}

int cmd_init_koszul(Context& ctx, const Presentation& pres, bool search) {
  ordered_json j;
  j["command"] = "init-koszul";
  if (search) {
    const SearchResult r = initially_koszul_search(pres);
    j["found"] = r.found;
    j["tried"] = r.tried;
    if (r.found) j["order"] = order_json(pres, r.order);
    const std::string text = r.found ? "Found: " + order_text(pres, r.order) + " (" + std::to_string(r.tried) +
                                           " orders tried)\n"
                                     : "NotFound (" + std::to_string(r.tried) + " orders tried)\n";
    return emit(ctx, j, text, r.found ? 0 : 1);
  }
  const InitKoszulVerdict v = initially_koszul_criterion(pres, pres.order);
  j["order"] = order_json(pres, pres.order);
  j["initially_koszul"] = v.yes;
  std::string text = "order: " + order_text(pres, pres.order) + "\n";
  if (v.yes) {
    text += "Yes\n";
  } else if (v.reason == InitKoszulVerdict::Reason::NotPBW) {
    j["reason"] = "NotPBW";
    j["witness"] = pres.render_word(*v.pbw_witness);
    text += "No: not PBW, witness " + pres.render_word(*v.pbw_witness) + "\n";
  } else {
    j["reason"] = "Segment";
    j["witness"] = {{"k", v.k}, {"j", v.j}, {"i", v.i}};
    text += "No: x_" + std::to_string(v.k) + " x_" + std::to_string(v.j) + " is a leading monomial but x_" +
            std::to_string(v.k) + " x_" + std::to_string(v.i) + " is not\n";
  }
  return emit(ctx, j, text, v.yes ? 0 : 1);
}

int cmd_semi_tensor(Context& ctx, const Presentation& c, const std::string& left, const std::string& right,
                    int bound) {
  const Presentation a = load_presentation(left);
  const Presentation b = load_presentation(right);
  const bool holds = semi_tensor_check(c, a, b, bound);
  ordered_json j;
  j["command"] = "semi-tensor";
  j["bound"] = bound;
  j["holds"] = holds;
  return emit(ctx, j, std::string(holds ? "semi-tensor: holds" : "semi-tensor: fails") + " (bound " +
                          std::to_string(bound) + ")\n",
              holds ? 0 : 1);
}

int cmd_processing(Context& ctx, const Presentation& pres, int r, int bound) {
  const GroebnerBasis gb = groebner_complete(pres, bound);
  const ProcessingVerdict v = restricted_processing_check(gb, r, bound);
  const OverlapGraph g = overlap_graph(gb);
  ordered_json j;
  j["command"] = "processing";
  j["r"] = r;
  j["bound"] = bound;
  j["holds"] = v.holds;
  if (!v.holds)
    j["witness"] = {{"p", v.p.empty() ? "1" : pres.render_word(v.p)},
                    {"q", v.q.empty() ? "1" : pres.render_word(v.q)},
                    {"split", v.split}};
  j["overlap_graph"] = {{"vertices", g.vertices}, {"edges", g.edges}, {"acyclic", g.acyclic}};
  std::string text = "processing (r = " + std::to_string(r) + ", bound " + std::to_string(bound) + "): ";
  text += v.holds ? "holds\n"
                  : "fails at p = " + pres.render_word(v.p) + ", q = " + pres.render_word(v.q) + "\n";
  text += std::string("overlap graph: ") + (g.acyclic ? "acyclic" : "cyclic") + "\n";
  return emit(ctx, j, text, v.holds ? 0 : 1);
}

ordered_json experiment_json(const GenericExperimentReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["r"] = r.r;
  j["prime"] = r.p;
  j["seed"] = r.seed;
  j["max_degree"] = r.max_degree;
  j["hom_bound"] = r.hom_bound;
  j["hilbert"] = series_json(r.hilbert);
  j["expected"] = series_json(r.expected);
  j["genericity_failure"] = r.genericity_failure;
  ordered_json checks = ordered_json::object();
  for (const auto& [name, ok] : r.checks) checks[name] = ok;
  j["checks"] = checks;
  j["ok"] = r.ok();
  if (r.table) {
    j["filtration"] = filtration_to_json(*r.table);
    if (r.verification) j["filtration"]["verification"] = report_json(*r.verification);
  }
  j["log"] = r.log;
  return j;
}

int cmd_generic(Context& ctx, bool small, std::size_t n, std::size_t r, std::uint64_t p, std::uint64_t seed,
                std::size_t count, int max_degree, int hom_bound, int steps) {
  ordered_json runs = ordered_json::array();
  std::ostringstream text;
  std::size_t failures = 0, nongeneric = 0;
  for (std::size_t k = 0; k < count; ++k) {
    const std::uint64_t s = seed + k;
    const GenericExperimentReport rep = small ? small_r_experiment(n, r, p, s, max_degree, hom_bound)
                                              : large_r_experiment(n, r, p, s, steps, max_degree, hom_bound);
    runs.push_back(experiment_json(rep));
    if (rep.genericity_failure) ++nongeneric;
    else if (!rep.ok()) ++failures;
    text << "seed " << s << ": hilbert " << rep.hilbert.to_string();
    for (const auto& [name, ok] : rep.checks) text << ", " << name << (ok ? " ok" : " FAILED");
    if (rep.genericity_failure) text << ", GenericityFailure";
    text << "\n";
    for (const auto& line : rep.log) text << "  " << line << "\n";
  }
  text << (count - failures - nongeneric) << "/" << count << " samples passed";
  if (nongeneric) text << ", " << nongeneric << " flagged GenericityFailure";
  text << " (max-degree " << max_degree << ", hom-bound " << hom_bound << ")\n";
  ordered_json j;
  j["command"] = small ? "generic small-r" : "generic large-r";
  j["max_degree"] = max_degree;
  j["hom_bound"] = hom_bound;
  if (!small) j["steps"] = steps;
  j["passed"] = count - failures - nongeneric;
  j["genericity_failures"] = nongeneric;
  j["runs"] = runs;
  return emit(ctx, j, text.str(), failures ? 1 : 0);
}

FiltrationKind parse_kind(const std::string& s) {
  if (s == "koszul") return FiltrationKind::Koszul;
  if (s == "rate") return FiltrationKind::Rate;
  throw Error(ErrorCode::InvalidArgument, "unknown filtration kind '" + s + "'");
}

}  // namespace

std::vector<NcPoly> parse_ideal_generators(const std::string& text, const Presentation& pres) {
  std::vector<NcPoly> gens;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    gens.push_back(parse_poly(line, pres.names, pres.field, lineno));
  }
  if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "ideal file lists no generators");
  return gens;
}

ordered_json filtration_to_json(const FiltrationTable& table) {
  const Presentation& pres = table.ring->presentation();
  ordered_json j;
  j["kind"] = table.kind == FiltrationKind::Koszul ? "koszul" : "rate";
  j["degree"] = table.degree;
  ordered_json ideals = ordered_json::object();
  for (const auto& id : table.ids) {
    ordered_json gens = ordered_json::array();
    for (const auto& g : table.ideals.at(id)) gens.push_back(pres.render_poly(g));
    ideals[id] = {{"gens", gens}};
  }
  j["ideals"] = ideals;
  ordered_json entries = ordered_json::object();
  for (const auto& id : table.ids) {
    auto e = table.entries.find(id);
    if (e == table.entries.end()) continue;
    entries[id] = {{"parent", e->second.parent}, {"x", pres.render_poly(e->second.x)}, {"colon", e->second.colon}};
  }
  j["entries"] = entries;
  j["truncated"] = std::vector<std::string>(table.truncated.begin(), table.truncated.end());
  return j;
}

FiltrationTable filtration_from_json(const ordered_json& doc, std::shared_ptr<const QuotientAlgebra> ring) {
  const Presentation& pres = ring->presentation();
  FiltrationTable t;
  t.ring = std::move(ring);
  try {
    if (doc.contains("kind")) t.kind = parse_kind(doc.at("kind").get<std::string>());
    if (doc.contains("degree")) t.degree = doc.at("degree").get<int>();
    if (!doc.at("ideals").is_object() || (doc.contains("entries") && !doc.at("entries").is_object()))
      throw Error(ErrorCode::InvalidArgument, "malformed filtration file: ideals and entries must be objects");
    for (const auto& [id, body] : doc.at("ideals").items()) {
      std::vector<NcPoly> gens;
      for (const auto& g : body.at("gens")) gens.push_back(parse_poly(g.get<std::string>(), pres.names, pres.field));
      t.add_ideal(id, std::move(gens));
    }
    if (doc.contains("entries")) {
      for (const auto& [id, e] : doc.at("entries").items())
        t.add_entry(id, e.at("parent").get<std::string>(),
                    parse_poly(e.at("x").get<std::string>(), pres.names, pres.field),
                    e.at("colon").get<std::string>());
    }
    if (doc.contains("truncated"))
      for (const auto& id : doc.at("truncated")) t.truncated.insert(id.get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed filtration file: ") + e.what());
  }
  return t;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Koszul-type structure and Hilbert series of graded algebras", "koszulkit"};
  app.require_subcommand(1);
  Context ctx{out};
  app.add_flag("--json", ctx.json, "Machine-readable output");

  std::string pres_path;
  int bound = kDefaultBound;
  int hom_bound = kDefaultHomBound;
  std::function<int(const Presentation&)> action;

  auto with_pres = [&](CLI::App* sub) {
    sub->add_option("presentation", pres_path, "Presentation file")->required()->check(CLI::ExistingFile);
  };
  auto add_bound = [&](CLI::App* sub, const std::string& name = "--bound") {
    sub->add_option(name, bound, "Internal degree bound")->capture_default_str()->check(CLI::NonNegativeNumber);
  };
  auto add_hom_bound = [&](CLI::App* sub) {
    sub->add_option("--hom-bound", hom_bound, "Homological bound")->capture_default_str()->check(CLI::NonNegativeNumber);
  };

  auto* gb = app.add_subcommand("gb", "Groebner basis up to a degree bound");
  with_pres(gb);
  add_bound(gb);
  gb->callback([&] { action = [&](const Presentation& p) { return cmd_gb(ctx, p, bound); }; });

  auto* pbw = app.add_subcommand("pbw", "PBW certificate of a quadratic presentation");
  with_pres(pbw);
  pbw->callback([&] { action = [&](const Presentation& p) { return cmd_pbw(ctx, p); }; });

  bool ratfunc = false;
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function, optionally as a rational function");
  with_pres(hilbert);
  add_bound(hilbert, "--max-degree");
  hilbert->add_flag("--ratfunc", ratfunc, "Exact rational series");
  hilbert->callback([&] { action = [&](const Presentation& p) { return cmd_hilbert(ctx, p, bound, ratfunc); }; });

  auto* dual = app.add_subcommand("dual", "Quadratic dual presentation");
  with_pres(dual);
  dual->callback([&] { action = [&](const Presentation& p) { return cmd_dual(ctx, p); }; });

  auto* froberg = app.add_subcommand("froberg", "Residual of R(z) R^!(-z) = 1");
  with_pres(froberg);
  add_bound(froberg, "--max-degree");
  froberg->callback([&] { action = [&](const Presentation& p) { return cmd_froberg(ctx, p, bound); }; });

  std::string module_path;
  auto* koszul = app.add_subcommand("koszul", "Bounded Koszul certificate of k or of a right ideal");
  with_pres(koszul);
  add_hom_bound(koszul);
  add_bound(koszul);
  koszul->add_option("--module", module_path, "Right ideal generators, one per line")->check(CLI::ExistingFile);
  koszul->callback([&] {
    action = [&](const Presentation& p) { return cmd_koszul(ctx, p, hom_bound, bound, module_path); };
  });

  auto* rate = app.add_subcommand("rate", "Tor table of k and rate estimate");
  with_pres(rate);
  add_hom_bound(rate);
  add_bound(rate);
  rate->callback([&] { action = [&](const Presentation& p) { return cmd_rate(ctx, p, hom_bound, bound); }; });

  auto* anick = app.add_subcommand("anick", "Anick chains of a quadratic monomial algebra");
  with_pres(anick);
  add_hom_bound(anick);
  anick->callback([&] { action = [&](const Presentation& p) { return cmd_anick(ctx, p, hom_bound); }; });

  auto* filtration = app.add_subcommand("filtration", "Koszul and rate filtrations");
  filtration->require_subcommand(1);
  std::string table_path;
  auto* fverify = filtration->add_subcommand("verify", "Verify a filtration table");
  with_pres(fverify);
  fverify->add_option("table", table_path, "Filtration JSON file")->required()->check(CLI::ExistingFile);
  add_bound(fverify);
  add_hom_bound(fverify);
  fverify->callback([&] {
    action = [&](const Presentation& p) { return cmd_filtration_verify(ctx, p, table_path, bound, hom_bound); };
  });
  int rate_degree = 0;
  auto* fmono = filtration->add_subcommand("monomial", "Subset (or rate) filtration of a monomial algebra");
  with_pres(fmono);
  add_bound(fmono);
  add_hom_bound(fmono);
  fmono->add_option("--rate-degree", rate_degree, "Build the monomial rate filtration of this degree instead");
  fmono->callback([&] {
    action = [&](const Presentation& p) { return cmd_filtration_monomial(ctx, p, bound, hom_bound, rate_degree); };
  });
  auto* fhilb = filtration->add_subcommand("hilbert", "Hilbert series forced by a filtration table");
  with_pres(fhilb);
  fhilb->add_option("table", table_path, "Filtration JSON file")->required()->check(CLI::ExistingFile);
  add_bound(fhilb);
  fhilb->callback([&] {
    action = [&](const Presentation& p) { return cmd_filtration_hilbert(ctx, p, table_path, bound); };
  });

  bool search = false;
  auto* init = app.add_subcommand("init-koszul", "Initially-Koszul criterion in the file's order");
  with_pres(init);
  init->add_flag("--search", search, "Search generator orders");
  init->callback([&] { action = [&](const Presentation& p) { return cmd_init_koszul(ctx, p, search); }; });

  std::string left_path, right_path;
  auto* semi = app.add_subcommand("semi-tensor", "Leading monomials of a semi-tensor product");
  with_pres(semi);
  semi->add_option("--left", left_path, "Presentation of A")->required()->check(CLI::ExistingFile);
  semi->add_option("--right", right_path, "Presentation of B")->required()->check(CLI::ExistingFile);
  add_bound(semi);
  semi->callback([&] {
    action = [&](const Presentation& p) { return cmd_semi_tensor(ctx, p, left_path, right_path, bound); };
  });

  int r_processing = 1;
  auto* processing = app.add_subcommand("processing", "Restricted processing identity");
  with_pres(processing);
  processing->add_option("--r", r_processing, "Prefix length")->capture_default_str()->check(CLI::PositiveNumber);
  add_bound(processing);
  processing->callback([&] {
    action = [&](const Presentation& p) { return cmd_processing(ctx, p, r_processing, bound); };
  });

  auto* generic = app.add_subcommand("generic", "Experiments with random quadratic relations");
  generic->require_subcommand(1);
  std::size_t gn = 0, gr = 0, count = 1;
  std::uint64_t prime = 32003, seed = 0;
  int gdegree = -1, steps = 5;
  std::function<int()> generic_action;
  for (const bool small : {true, false}) {
    auto* sub = generic->add_subcommand(small ? "small-r" : "large-r",
                                        small ? "r < n: finite Koszul filtration" : "r > n^2 - n: unrolled filtration");
    sub->add_option("--n", gn, "Number of generators")->required()->check(CLI::PositiveNumber);
    sub->add_option("--r", gr, "Number of relations")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--prime", prime, "Field characteristic")->capture_default_str();
    sub->add_option("--seed", seed, "First seed")->capture_default_str();
    sub->add_option("--count", count, "Number of consecutive seeds")->capture_default_str()->check(
        CLI::PositiveNumber);
    sub->add_option("--max-degree", gdegree, "Internal degree bound (6 for small-r, 4 for large-r)");
    add_hom_bound(sub);
    if (!small) sub->add_option("--steps", steps, "Annihilator rounds")->capture_default_str();
    sub->callback([&, small] {
      generic_action = [&, small] {
        const int d = gdegree >= 0 ? gdegree : (small ? 6 : 4);
        return cmd_generic(ctx, small, gn, gr, prime, seed, count, d, hom_bound, steps);
      };
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (generic_action) return generic_action();
    if (!action) {
      err << app.help();
      return 2;
    }
    return action(load_presentation(pres_path));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace koszulkit::cli
