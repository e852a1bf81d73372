#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "koszulkit/error.hpp"
#include "support.hpp"

using namespace koszulkit;
using nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

const fs::path kTests = KOSZULKIT_TEST_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

/// Runs the CLI in-process; file-looking arguments resolve against tests/data.
Outcome invoke(std::vector<std::string> args) {
  for (auto& a : args) {
    const fs::path p = kTests / "data" / a;
    if (a.find('.') != std::string::npos && fs::exists(p)) a = p.string();
  }
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> parts;
  for (std::string w; in >> w;) parts.push_back(w);
  return parts;
}

std::string trim(std::string s) {
  s.erase(0, s.find_first_not_of(" \t"));
  s.erase(s.find_last_not_of(" \t") + 1);
  return s;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cli golden JSON outputs and exit codes") {
  std::istringstream cases(slurp(kTests / "golden" / "cases.txt"));
  int count = 0;
  for (std::string line; std::getline(cases, line);) {
    if (line.empty() || line[0] == '#') continue;
    const auto bar1 = line.find('|');
    const auto bar2 = line.find('|', bar1 + 1);
    const std::string name = trim(line.substr(0, bar1));
    const int expected = std::stoi(trim(line.substr(bar1 + 1, bar2 - bar1 - 1)));
    auto args = split(line.substr(bar2 + 1));
    args.insert(args.begin(), "--json");
    CAPTURE(name);
    const Outcome o = invoke(args);
    CHECK(o.code == expected);
    CHECK(o.err.empty());
    const ordered_json got = ordered_json::parse(o.out);
    const ordered_json want = ordered_json::parse(slurp(kTests / "golden" / (name + ".json")));
    CHECK(got == want);
    ++count;
  }
  CHECK(count == 22);
}

TEST_CASE("cli examples") {
  SUBCASE("hilbert of xy") {
    const Outcome o = invoke({"hilbert", "--max-degree", "4", "xy.pres"});
    CHECK(o.code == 0);
    CHECK(o.out == "[1,2,3,4,5]\n");
  }
  SUBCASE("pbw failure names x^3") {
    const Outcome o = invoke({"pbw", "notpbw.pres"});
    CHECK(o.code == 1);
    CHECK(o.out.find("NotPBW: witness x*x*x") != std::string::npos);
  }
  SUBCASE("search on a free algebra") {
    const Outcome o = invoke({"--json", "init-koszul", "--search", "free3.pres"});
    CHECK(o.code == 0);
    const auto j = ordered_json::parse(o.out);
    CHECK(j["found"] == true);
    CHECK(j["order"] == ordered_json({"x", "y", "z"}));
  }
}

TEST_CASE("cli hilbert output matches brute-force counts") {
  for (const char* file : {"xy.pres", "comm3.pres", "notpbw.pres", "xyx.pres", "bb7.pres"}) {
    CAPTURE(file);
    const Outcome o = invoke({"--json", "hilbert", "--max-degree", "5", file});
    REQUIRE(o.code == 0);
    const auto p = load_presentation((kTests / "data" / file).string());
    const auto counts = oracle::hilbert(p, 5);
    const auto got = ordered_json::parse(o.out)["series"];
    REQUIRE(got.size() == counts.size());
    for (std::size_t d = 0; d < counts.size(); ++d) CHECK(got[d].get<long>() == counts[d]);
  }
}

TEST_CASE("cli defaults are echoed") {
  auto j = ordered_json::parse(invoke({"--json", "hilbert", "xy.pres"}).out);
  CHECK(j["max_degree"] == 8);
  CHECK(j["series"].size() == 9);
  j = ordered_json::parse(invoke({"--json", "koszul", "xy.pres"}).out);
  CHECK(j["hom_bound"] == 4);
  CHECK(j["bound"] == 8);
  j = ordered_json::parse(invoke({"--json", "filtration", "monomial", "xy.pres"}).out);
  CHECK(j["bound"] == 8);
  CHECK(j["hom_bound"] == 4);
  CHECK(invoke({"rate", "xy.pres"}).out.find("hom-bound 4, bound 8") != std::string::npos);
}

TEST_CASE("cli usage and input errors exit with 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"hilbert"}).code == 2);
  CHECK(invoke({"hilbert", "missing.pres"}).code == 2);
  CHECK(invoke({"hilbert", "xy.pres", "--max-degree", "many"}).code == 2);
  CHECK(invoke({"filtration", "xy.pres"}).code == 2);
  CHECK(invoke({"generic", "small-r", "--n", "3"}).code == 2);

  const Outcome nonhom = invoke({"hilbert", "nonhom.pres"});
  CHECK(nonhom.code == 2);
  CHECK(nonhom.err.find("NonHomogeneousRelation") != std::string::npos);
  CHECK(nonhom.out.empty());

  // Constructions that reject their input.
  CHECK(invoke({"anick", "xyx.pres"}).code == 2);
  CHECK(invoke({"filtration", "monomial", "comm3.pres"}).code == 2);
  CHECK(invoke({"pbw", "xyx.pres"}).code == 2);
  CHECK(invoke({"filtration", "hilbert", "xy.pres", "zA.ideal"}).code == 2);
  CHECK(invoke({"koszul", "xy.pres", "--module", "xy_subset.json"}).code == 2);
}

TEST_CASE("cli help exits with 0") {
  const Outcome o = invoke({"--help"});
  CHECK(o.code == 0);
  CHECK(o.out.find("filtration") != std::string::npos);
  CHECK(invoke({"generic", "small-r", "--help"}).code == 0);
}

TEST_CASE("cli text output for negative verdicts") {
  Outcome o = invoke({"koszul", "zA.pres", "--module", "zA.ideal", "--hom-bound", "8"});
  CHECK(o.code == 1);
  CHECK(o.out.find("NotKoszul") != std::string::npos);
  o = invoke({"init-koszul", "bb7.pres"});
  CHECK(o.code == 1);
  CHECK(o.out.find("No: x_2 x_2") != std::string::npos);
  o = invoke({"filtration", "hilbert", "xy.pres", "xy_bad.json"});
  CHECK(o.code == 1);
  CHECK(o.out.find("violation") != std::string::npos);
}

TEST_CASE("filtration JSON round trip") {
  const auto pres = load_presentation((kTests / "data" / "xy.pres").string());
  auto ring = std::make_shared<const QuotientAlgebra>(pres, 6);
  const auto doc = ordered_json::parse(slurp(kTests / "data" / "xy_subset.json"));
  const FiltrationTable t = cli::filtration_from_json(doc, ring);
  CHECK(t.ids == std::vector<std::string>{"0", "(x)", "(y)", "(x, y)"});
  CHECK(t.entries.at("(x)").colon == "(y)");
  const FiltrationTable back = cli::filtration_from_json(cli::filtration_to_json(t), ring);
  CHECK(back.ids == t.ids);
  CHECK(back.ideals == t.ideals);
  CHECK(cli::filtration_to_json(back) == cli::filtration_to_json(t));

  const FiltrationTable built = monomial_subset_filtration(ring);
  const ordered_json emitted = cli::filtration_to_json(built);
  CHECK(cli::filtration_to_json(cli::filtration_from_json(emitted, ring)) == emitted);

  CHECK_THROWS_AS(cli::filtration_from_json(ordered_json::parse(R"({"ideals": []})"), ring), Error);
  CHECK_THROWS_AS(cli::filtration_from_json(ordered_json::parse(R"({"ideals": {"a": {"gens": ["w"]}}})"), ring),
                  Error);
  CHECK_THROWS_AS(cli::filtration_from_json(ordered_json::parse(R"({"kind": "odd", "ideals": {}})"), ring), Error);
}

TEST_CASE("ideal generator files") {
  const auto pres = load_presentation((kTests / "data" / "zA.pres").string());
  const auto gens = cli::parse_ideal_generators("# header\n\nz  # trailing\n  x*y - 2 y*x\r\n", pres);
  REQUIRE(gens.size() == 2);
  CHECK(pres.render_poly(gens[0]) == "z");
  CHECK(gens[1] == parse_poly("x*y - 2 y*x", pres.names, pres.field));
  CHECK_THROWS_AS(cli::parse_ideal_generators("# nothing\n", pres), Error);
  try {
    cli::parse_ideal_generators("z\nq\n", pres);
    FAIL("expected an error");
  } catch (const koszulkit::ParseError& e) {
    CHECK(e.line() == 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownGenerator);
  }
}
