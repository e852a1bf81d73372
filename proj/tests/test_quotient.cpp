#include <doctest.h>

#include <random>
#include <set>

#include "koszulkit/error.hpp"
#include "koszulkit/quotient.hpp"
#include "support.hpp"

using namespace koszulkit;

namespace {

const char* kFree2 = "generators x y\nrelations\nend\n";
const char* kXY = "generators x y\nrelations\nx*y\nend\n";
const char* kComm2 = "generators x y\nrelations\ny*x - x*y\nend\n";
const char* kComm3 = "generators x y z\nrelations\ny*x - x*y\nz*x - x*z\nz*y - y*z\nend\n";
const char* kAllQuad = "generators x y\nrelations\nx*x\nx*y\ny*x\ny*y\nend\n";

std::set<std::string> rendered_relations(const Presentation& p) {
  std::set<std::string> out;
  for (const auto& f : p.relations) out.insert(p.render_poly(f));
  return out;
}

Presentation random_monomial(std::mt19937_64& rng, std::size_t n, int max_len, int count) {
  std::vector<NcPoly> rels;
  std::uniform_int_distribution<int> letter(0, static_cast<int>(n) - 1), len(2, max_len);
  std::set<Word> seen;
  for (int k = 0; k < count; ++k) {
    std::vector<Letter> w;
    for (int l = len(rng); l > 0; --l) w.push_back(static_cast<Letter>(letter(rng)));
    if (seen.insert(Word(w)).second) rels.push_back(NcPoly::monomial(FieldSpec::rationals(), Word(w)));
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return Presentation::make(names, FieldSpec::rationals(), rels);
}

}  // namespace

TEST_CASE("normal words") {
  QuotientAlgebra free2(oracle::pres(kFree2), 4);
  CHECK(free2.normal_words(2) == std::vector<Word>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  QuotientAlgebra xy(oracle::pres(kXY), 4);
  CHECK(xy.normal_words(2) == std::vector<Word>{{0, 0}, {1, 0}, {1, 1}});
  QuotientAlgebra comm(oracle::pres(kComm2), 4);
  CHECK(comm.normal_words(2) == std::vector<Word>{{0, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("hilbert functions") {
  CHECK(QuotientAlgebra(oracle::pres(kXY), 4).hilbert_function(4) == TruncatedSeries{1, 2, 3, 4, 5});
  CHECK(QuotientAlgebra(oracle::pres(kComm3), 4).hilbert_function(4) == TruncatedSeries{1, 3, 6, 10, 15});
  CHECK(QuotientAlgebra(oracle::pres(kFree2), 4).hilbert_function(4) == TruncatedSeries{1, 2, 4, 8, 16});
}

TEST_CASE("insufficient bound is reported") {
  QuotientAlgebra q(oracle::pres("generators x y\norder y x\nrelations\nx*x - x*y\nend\n"), 4);
  CHECK(q.dim(4) > 0);
  try {
    q.dim(5);
    FAIL("expected InsufficientGBBound");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InsufficientGBBound);
  }
}

TEST_CASE("monomial hilbert series") {
  CHECK(monomial_hilbert_ratfunc(oracle::pres(kXY)) == RationalFunction(Polynomial{1}, Polynomial{1, -2, 1}));
  CHECK(monomial_hilbert_ratfunc(oracle::pres("generators a b c\nrelations\nend\n")) ==
        RationalFunction(Polynomial{1}, Polynomial{1, -3}));
  CHECK(monomial_hilbert_ratfunc(oracle::pres(kAllQuad)) == RationalFunction(Polynomial{1, 2}));
  try {
    monomial_hilbert_ratfunc(oracle::pres(kComm2));
    FAIL("expected NonMonomialInput");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonMonomialInput);
  }
}

TEST_CASE("monomial series agrees with normal-word counts") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    Presentation p = random_monomial(rng, 2 + trial % 2, 4, 1 + trial % 4);
    QuotientAlgebra q(p, 4);
    REQUIRE(q.gb().complete());
    const int D = p.num_generators() == 2 ? 15 : 9;
    CHECK(series_match(q.hilbert_function(D), monomial_hilbert_ratfunc(q)));
    if (trial < 8) {
      auto dims = oracle::hilbert(p, 5);
      for (int d = 0; d <= 5; ++d) CHECK(static_cast<long>(q.dim(d)) == dims[d]);
    }
  }
}

TEST_CASE("series of a complete non-monomial basis") {
  QuotientAlgebra q(oracle::pres(kComm3), 3);
  RationalFunction h = hilbert_ratfunc(q);
  CHECK(h == RationalFunction(Polynomial{1}, Polynomial{1, -3, 3, -1}));
}

TEST_CASE("multiplication is associative and matches the free product") {
  std::mt19937_64 rng(23);
  for (const char* text : {kComm3, "generators x y z\nrelations\nx*y - z*z\ny*z - x*x\nend\n"}) {
    Presentation p = oracle::pres(text);
    QuotientAlgebra q(p, 7);
    std::uniform_int_distribution<long> c(-2, 2);
    auto rand_elem = [&](int d) {
      NcPoly f(p.field);
      for (const Word& w : oracle::all_words(3, d)) f.add_term(w, p.field.from_int(c(rng)));
      return f;
    };
    for (int trial = 0; trial < 10; ++trial) {
      NcPoly a = rand_elem(1), b = rand_elem(2), e = rand_elem(1);
      SparseVector va = q.coordinates(a), vb = q.coordinates(b), ve = q.coordinates(e);
      CHECK(q.multiply(1, va, 2, vb) == q.coordinates(poly_mul(a, b)));
      CHECK(q.multiply(3, q.multiply(1, va, 2, vb), 1, ve) == q.multiply(1, va, 3, q.multiply(2, vb, 1, ve)));
      CHECK(q.coordinates(q.element(2, vb)) == vb);
    }
  }
}

TEST_CASE("quadratic dual examples") {
  Presentation d0 = quadratic_dual(oracle::pres(kFree2));
  CHECK(d0.relations.size() == 4);
  CHECK(QuotientAlgebra(d0, 3).hilbert_function(3) == TruncatedSeries{1, 2, 0, 0});
  Presentation d1 = quadratic_dual(oracle::pres(kXY));
  CHECK(rendered_relations(d1) == std::set<std::string>{"x'*x'", "y'*x'", "y'*y'"});
  Presentation d2 = quadratic_dual(oracle::pres(kComm2));
  CHECK(rendered_relations(d2) == std::set<std::string>{"x'*x'", "y'*y'", "y'*x' + x'*y'"});
  CHECK_THROWS_AS(quadratic_dual(oracle::pres("generators x\nrelations\nx*x*x\nend\n")), Error);
}

TEST_CASE("duality is involutive and counts dimensions") {
  std::mt19937_64 rng(29);
  FieldSpec f = FieldSpec::prime(11);
  std::uniform_int_distribution<long> c(0, 10);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<NcPoly> rels;
    for (int r = 0; r < 1 + trial % 4; ++r) {
      NcPoly g(f);
      for (Letter a = 0; a < 3; ++a)
        for (Letter b = 0; b < 3; ++b)
          if (c(rng) < 4) g.add_term({a, b}, f.from_int(c(rng)));
      if (!g.is_zero()) rels.push_back(g);
    }
    Presentation p = Presentation::make({"a", "b", "c"}, f, rels);
    Presentation dd = quadratic_dual(quadratic_dual(p));
    auto span = [&](const Presentation& x) {
      EchelonBasis e(f, 9);
      for (const auto& g : x.relations) e.insert(oracle::to_vector(g, 3));
      return e;
    };
    CHECK(span(dd) == span(p));
    QuotientAlgebra r(p, 2), rd(quadratic_dual(p), 2);
    CHECK(rd.dim(2) == 9 - r.dim(2));
  }
}

TEST_CASE("froberg residuals") {
  CHECK(froberg_check(oracle::pres(kFree2), 6).is_zero());
  CHECK(froberg_check(oracle::pres(kXY), 6).is_zero());
  CHECK(froberg_check(oracle::pres(kAllQuad), 6).is_zero());
  CHECK(froberg_check(oracle::pres(kComm3), 6).is_zero());
}

TEST_CASE("tensor products") {
  Presentation kx = oracle::pres("generators x\nrelations\nend\n");
  Presentation ky = oracle::pres("generators y\nrelations\nend\n");
  Presentation t = tensor_product(kx, ky);
  CHECK(t.names == std::vector<std::string>{"x", "y"});
  REQUIRE(t.relations.size() == 1);
  CHECK(leading_monomial(t.relations[0], t.order).first == Word{0, 1});
  CHECK(QuotientAlgebra(t, 4).hilbert_function(4) == TruncatedSeries{1, 2, 3, 4, 5});

  Presentation a = oracle::pres(kXY);
  Presentation t2 = tensor_product(a, kx);
  CHECK(t2.names == std::vector<std::string>{"x", "y", "x_2"});
  CHECK(t2.relations.size() == 3);
  CHECK(t2.all_quadratic());
  Presentation t3 = tensor_product(a, oracle::pres("generators u v\nrelations\nv*v\nend\n"));
  CHECK(t3.all_quadratic());
  CHECK(t3.relations.size() == 6);
}

TEST_CASE("semi-tensor check") {
  Presentation kx = oracle::pres("generators x\nrelations\nend\n");
  Presentation ky = oracle::pres("generators y\nrelations\nend\n");
  CHECK(semi_tensor_check(tensor_product(kx, ky), kx, ky));
  CHECK(semi_tensor_check(oracle::pres("generators x y\nrelations\nx*y - 3 y*x\nend\n"), kx, ky));
  CHECK_FALSE(semi_tensor_check(oracle::pres("generators x y\nrelations\nx*y - x*x\nend\n"), kx, ky));
}
