#include <doctest.h>

#include "koszulkit/error.hpp"
#include "koszulkit/generic.hpp"
#include "support.hpp"

using namespace koszulkit;

TEST_CASE("random quadratic presentations") {
  GenericPresentation a = random_quadratic_presentation(2, 1, 32003, 5);
  GenericPresentation b = random_quadratic_presentation(2, 1, 32003, 5);
  CHECK(a.pres == b.pres);
  REQUIRE(a.pres.relations.size() == 1);
  CHECK(a.pres.relations[0].degree() == 2);
  CHECK_FALSE(random_quadratic_presentation(2, 1, 32003, 6).pres == a.pres);
  CHECK(random_quadratic_presentation(3, 0, 32003, 1).pres.relations.empty());

  // f_j is recovered from its left factors.
  GenericPresentation g = random_quadratic_presentation(3, 4, 101, 9);
  for (std::size_t j = 0; j < 4; ++j) {
    NcPoly sum(g.pres.field);
    for (Letter i = 0; i < 3; ++i) sum += NcPoly::monomial(g.pres.field, Word{i}) * g.left_factors[j][i];
    CHECK(sum == g.pres.relations[j]);
  }
  CHECK_THROWS_AS(random_quadratic_presentation(2, 5, 101, 1), Error);
  CHECK_THROWS_AS(random_quadratic_presentation(2, 1, 100, 1), Error);
}

TEST_CASE("golod shafarevich series") {
  CHECK(golod_shafarevich_series(3, 2, 4) == TruncatedSeries{1, 3, 7, 15, 31});
  CHECK(golod_shafarevich_series(4, 0, 3) == TruncatedSeries{1, 4, 16, 64});
  CHECK(golod_shafarevich_series(2, 1, 4) == TruncatedSeries{1, 2, 3, 4, 5});
  // Coefficient recursion h_k = n h_{k-1} - r h_{k-2}.
  TruncatedSeries s = golod_shafarevich_series(5, 3, 9);
  for (int k = 2; k <= 9; ++k) CHECK(s[k] == 5 * s[k - 1] - 3 * s[k - 2]);
}

TEST_CASE("small r experiment") {
  GenericExperimentReport rep = small_r_experiment(3, 2, 32003, 1, 6, 4);
  CHECK(rep.ok());
  CHECK(rep.hilbert == TruncatedSeries{1, 3, 7, 15, 31, 63, 127});
  CHECK(rep.check("colon_table"));
  CHECK(rep.check("filtration"));
  CHECK(rep.check("rational_series"));
  REQUIRE(rep.table.has_value());
  CHECK(rep.table->ideals.size() == 6);
  CHECK(rep.table->entries.at("I_3").colon == "J_2");
  CHECK(rep.verification->flag_chain == std::vector<std::string>{"0", "I_1", "I_2", "I_3"});
  // The Hilbert prefix agrees with a brute-force count.
  CHECK(rep.hilbert.truncated(4) == oracle::series(oracle::hilbert(random_quadratic_presentation(3, 2, 32003, 1).pres, 4)));

  GenericExperimentReport again = small_r_experiment(3, 2, 32003, 1, 6, 4);
  CHECK(again.log == rep.log);
  CHECK(again.hilbert == rep.hilbert);

  GenericExperimentReport four = small_r_experiment(4, 3, 32003, 2, 4, 3);
  CHECK(four.ok());
  CHECK(four.table->ideals.size() == 8);

  GenericExperimentReport free2 = small_r_experiment(2, 0, 32003, 3, 5, 3);
  CHECK(free2.ok());
  CHECK(free2.table->ideals.size() == 3);

  CHECK_THROWS_AS(small_r_experiment(3, 3, 32003, 1), Error);
}

TEST_CASE("non-generic samples are flagged") {
  // Over F_2 random relations collapse often; scan for a flagged sample.
  bool flagged = false;
  for (std::uint64_t seed = 0; seed < 40 && !flagged; ++seed) {
    GenericExperimentReport rep = small_r_experiment(3, 2, 2, seed, 5, 3);
    if (rep.genericity_failure) {
      flagged = true;
      CHECK_FALSE(rep.ok());
      CHECK(rep.log.front().find("GenericityFailure") == 0);
    }
  }
  CHECK(flagged);
}

TEST_CASE("large r experiment") {
  GenericExperimentReport a = large_r_experiment(3, 7, 32003, 4, 3, 4, 3);
  CHECK(a.ok());
  CHECK(a.hilbert == TruncatedSeries{1, 3, 2, 0, 0});
  CHECK(a.check("annihilators"));
  CHECK(a.verification->valid);
  CHECK(a.table->entries.at("I_2").colon == "R+");

  GenericExperimentReport b = large_r_experiment(2, 4, 32003, 1, 5, 4, 3);
  CHECK(b.ok());
  CHECK(b.table->ideals.size() == 3);
  CHECK(b.table->entries.at("I_1").colon == "R+");
  CHECK(b.table->truncated.empty());

  GenericExperimentReport c = large_r_experiment(3, 8, 32003, 2, 0, 4, 3);
  CHECK(c.ok());
  CHECK(c.table->truncated.contains("I_1"));

  CHECK_THROWS_AS(large_r_experiment(3, 6, 32003, 1), Error);
}

TEST_CASE("h1 obstruction") {
  H1Obstruction a = h1_obstruction_series(2, 2);
  CHECK(a.series == Polynomial{0, 0, -2});
  CHECK(a.negative);
  H1Obstruction b = h1_obstruction_series(4, 4);
  CHECK(b.series == Polynomial{0, 0, -4});
  CHECK(b.negative);
  H1Obstruction c = h1_obstruction_series(5, 3);
  CHECK(c.series.is_zero());
  CHECK_FALSE(c.negative);
  // Closed form -q r z^2 across the whole range.
  for (long n = 1; n <= 7; ++n)
    for (long r = 0; r < n * n; ++r) {
      H1Obstruction h = h1_obstruction_series(n, r);
      CHECK(h.series == Polynomial::monomial(Rational(-(r / n) * r), 2));
      CHECK(h.negative == (r >= n));
    }
}
