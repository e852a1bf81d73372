#include <doctest.h>

#include <random>

#include "koszulkit/error.hpp"
#include "koszulkit/groebner.hpp"
#include "support.hpp"

using namespace koszulkit;

namespace {

const FieldSpec Q = FieldSpec::rationals();

NcPoly P(const Presentation& p, const std::string& s) { return parse_poly(s, p.names, p.field); }

const char* kCommutative3 =
    "generators x y z\nrelations\ny*x - x*y\nz*x - x*z\nz*y - y*z\nend\n";

// Reduction that rewrites at the rightmost occurrence instead.
NcPoly reduce_rightmost(const GroebnerBasis& gb, NcPoly f) {
  auto lms = gb.leading_monomials();
  auto elems = gb.elements();
  NcPoly result(f.field());
  while (!f.is_zero()) {
    auto [w, c] = leading_monomial(f, gb.order());
    std::size_t best = Word::npos, which = 0;
    for (std::size_t i = 0; i < lms.size(); ++i) {
      if (lms[i].size() > w.size()) continue;
      for (std::size_t pos = w.size() - lms[i].size() + 1; pos-- > 0;) {
        if (w.sub(pos, lms[i].size()) == lms[i] && (best == Word::npos || pos > best)) {
          best = pos;
          which = i;
        }
      }
    }
    if (best == Word::npos) {
      result.add_term(w, c);
      f.add_term(w, -c);
      continue;
    }
    Word a = w.prefix(best), b = w.suffix(w.size() - best - lms[which].size());
    Scalar lc = leading_monomial(elems[which], gb.order()).second;
    f -= (c / lc) * elems[which].sandwich(a, b);
  }
  return result;
}

}  // namespace

TEST_CASE("reduction examples") {
  Presentation p = oracle::pres("generators x y\nrelations\nx*y\nend\n");
  GroebnerBasis gb = groebner_complete(p, 6);
  CHECK(gb.reduce(P(p, "x*x*y")).is_zero());

  Presentation qp = oracle::pres("generators x y\nrelations\ny*x - 5 x*y\nend\n");
  GroebnerBasis qgb = groebner_complete(qp, 4);
  CHECK(qgb.reduce(P(qp, "y*x")) == P(qp, "5 x*y"));

  Presentation s = oracle::pres("generators x y\norder y x\nrelations\nx*x - x*y\nend\n");
  GroebnerBasis quad(Q, s.order);
  quad.set_state({s.relations[0].map_words([&](const Word& w) { return s.order.to_ranks(w); })}, 2, false);
  CHECK(quad.reduce(P(s, "x*x*x")) == P(s, "x*y*x"));
}

TEST_CASE("overlap enumeration") {
  GenOrder xy = GenOrder::identity(3);
  auto m = [](const Word& w) { return NcPoly::monomial(Q, w); };
  CHECK(overlaps({m({0, 1})}, xy).empty());
  auto sq = overlaps({m({0, 0})}, xy);
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].word == Word{0, 0, 0});
  auto chain = overlaps({m({0, 1}), m({1, 2})}, xy);
  REQUIRE(chain.size() == 1);
  CHECK(chain[0].word == Word{0, 1, 2});
  auto incl = overlaps({m({0, 1, 0}), m({1})}, xy);
  CHECK(std::any_of(incl.begin(), incl.end(), [](const Overlap& o) { return o.inclusion; }));
}

TEST_CASE("completion examples") {
  Presentation qp = oracle::pres("generators x y\nrelations\ny*x - x*y\nend\n");
  GroebnerBasis a = groebner_complete(qp, 4);
  CHECK(a.complete());
  CHECK(a.elements() == qp.relations);

  Presentation s = oracle::pres("generators x y\norder y x\nrelations\nx*x - x*y\nend\n");
  GroebnerBasis b = groebner_complete(s, 4);
  CHECK_FALSE(b.complete());
  auto elems = b.elements();
  CHECK(std::find(elems.begin(), elems.end(), P(s, "x*y*x - x*y*y")) != elems.end());

  Presentation c = oracle::pres(kCommutative3);
  GroebnerBasis cgb = groebner_complete(c, 3);
  CHECK(cgb.complete());
  CHECK(cgb.size() == 3);
}

TEST_CASE("normal word counts agree with brute-force ideal dimensions") {
  const std::vector<std::string> cases = {
      kCommutative3,
      "generators x y\norder y x\nrelations\nx*x - x*y\nend\n",
      "generators x y\nrelations\nx*y*x\nend\n",
      "generators x y z\nrelations\nx*y - z*z\ny*z - x*x\nend\n",
      "field prime 7\ngenerators x y\nrelations\nx*x + 3 y*y\nx*y + y*x - y*y\nend\n",
      "generators x y z t\norder x y t z\nrelations\nz*y - t*z\nz*x\nend\n",
  };
  const int D = 5;
  for (const auto& text : cases) {
    Presentation p = oracle::pres(text);
    GroebnerBasis gb = groebner_complete(p, D);
    auto dims = oracle::hilbert(p, D);
    for (int d = 0; d <= D; ++d) CHECK(static_cast<long>(gb.normal_words(d).size()) == dims[d]);
  }
}

TEST_CASE("reduction properties on random inputs") {
  std::mt19937_64 rng(21);
  Presentation p = oracle::pres(kCommutative3);
  GroebnerBasis gb = groebner_complete(p, 4);
  std::uniform_int_distribution<int> letter(0, 2), coef(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    NcPoly f(Q);
    for (int t = 0; t < 5; ++t) {
      std::vector<Letter> w;
      for (int k = 0; k < 4; ++k) w.push_back(static_cast<Letter>(letter(rng)));
      f.add_term(Word(w), Q.from_int(coef(rng)));
    }
    NcPoly r = gb.reduce(f);
    CHECK(gb.reduce(r) == r);
    CHECK(reduce_rightmost(gb, f) == r);
    for (const auto& [w, c] : r.terms()) CHECK(gb.is_normal(w));
    // f - r lies in the ideal: membership in the degree-4 component.
    EchelonBasis ideal = oracle::ideal_component(p, 4);
    CHECK(ideal.contains(oracle::to_vector(f - r, 3)));
    NcPoly nf(Q);
    for (const auto& [w, c] : f.terms()) nf += c * gb.normal_form(w);
    CHECK(nf == r);
  }
}

TEST_CASE("pbw certificate") {
  CHECK(pbw_certificate(oracle::pres(kCommutative3)).pbw);
  auto v = pbw_certificate(oracle::pres("generators x y\norder y x\nrelations\nx*x - x*y\nend\n"));
  CHECK_FALSE(v.pbw);
  REQUIRE(v.witness);
  CHECK(*v.witness == Word{0, 0, 0});
  CHECK(pbw_certificate(oracle::pres("generators x y z\nrelations\nx*y\ny*z\nz*z\nz*x\nend\n")).pbw);
  try {
    pbw_certificate(oracle::pres("generators x y\nrelations\nx*y*x\nend\n"));
    FAIL("expected NonQuadraticInput");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonQuadraticInput);
  }
}

TEST_CASE("pbw certificate agrees with degree-3 completion") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> coef(-1, 1);
  FieldSpec f = FieldSpec::prime(5);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<NcPoly> rels;
    for (int r = 0; r < 2; ++r) {
      NcPoly g(f);
      for (Letter a = 0; a < 2; ++a)
        for (Letter b = 0; b < 2; ++b) g.add_term({a, b}, f.from_int(coef(rng)));
      if (!g.is_zero()) rels.push_back(g);
    }
    Presentation p = Presentation::make({"x", "y"}, f, rels);
    bool pbw = pbw_certificate(p).pbw;
    GroebnerBasis gb = groebner_complete(p, 3);
    bool quadratic = true;
    for (const auto& g : gb.elements()) quadratic = quadratic && g.degree() == 2;
    // Completion to degree 3 certifies completeness only when every
    // overlap of the final basis has degree <= 3.
    bool certified = quadratic;
    for (const auto& ov : overlaps(gb.elements(), gb.order()))
      if (ov.word.size() == 3 && !gb.reduce(s_polynomial(gb.elements(), gb.order(), ov)).is_zero()) certified = false;
    CHECK(pbw == certified);
  }
}

TEST_CASE("basis dump header") {
  Presentation p = oracle::pres("generators x y z\norder z x y\nrelations\nx*y\nend\n");
  GroebnerBasis gb = groebner_complete(p, 5);
  std::string text = gb.render(p);
  CHECK(text.rfind("# order: z<x<y, bound: 5, complete: true\n", 0) == 0);
  CHECK(text.find("x*y") != std::string::npos);
}

TEST_CASE("restricted processing") {
  Presentation a = oracle::pres("generators x y\nrelations\nx*y\nend\n");
  CHECK(restricted_processing_check(groebner_complete(a, 6), 1, 6).holds);
  Presentation b = oracle::pres("generators x y\nrelations\nx*y*x\nend\n");
  GroebnerBasis gb = groebner_complete(b, 6);
  CHECK(restricted_processing_check(gb, 2, 6).holds);
  ProcessingVerdict v = restricted_processing_check(gb, 1, 6);
  CHECK_FALSE(v.holds);
  CHECK_FALSE(processing_identity_holds(gb, v.p, v.q, 1));
  CHECK_FALSE(processing_identity_holds(gb, Word{0}, Word{1, 0, 1}, 1));
  CHECK(v.split == 1);
}

TEST_CASE("overlap graph") {
  Presentation mono = oracle::pres("generators x y\nrelations\nx*y\ny*y\nend\n");
  auto g1 = overlap_graph(groebner_complete(mono, 4));
  CHECK(g1.edges.empty());
  CHECK(g1.acyclic);
  Presentation comm = oracle::pres("generators x y\nrelations\ny*x - x*y\nend\n");
  auto g2 = overlap_graph(groebner_complete(comm, 4));
  CHECK(g2.edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}});
  CHECK_FALSE(g2.acyclic);
  Presentation s = oracle::pres("generators x y\norder y x\nrelations\nx*x - x*y\nend\n");
  GroebnerBasis quad(Q, s.order);
  quad.set_state({s.relations[0].map_words([&](const Word& w) { return s.order.to_ranks(w); })}, 2, false);
  auto g3 = overlap_graph(quad);
  CHECK(g3.edges.empty());
  CHECK(g3.acyclic);
}
