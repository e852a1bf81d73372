#pragma once

// Random quadratic algebras over prime fields and the filtrations that
// generic relations are expected to admit: a finite table when r < n, a
// bounded unrolling of an infinite one when r > n^2 - n, and the Hilbert
// series obstruction in between.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "koszulkit/filtration.hpp"

namespace koszulkit {

/// Relations f_j = sum_i x_i l_j^i with uniformly random linear forms.
struct GenericPresentation {
  Presentation pres;
  /// left_factors[j][i] = l_j^i, a linear form.
  std::vector<std::vector<NcPoly>> left_factors;
};

/// Generators x1..xn over F_p; deterministic in (n, r, p, seed).
GenericPresentation random_quadratic_presentation(std::size_t n, std::size_t r, std::uint64_t p,
                                                  std::uint64_t seed);

/// 1/(1 - nz + rz^2) expanded to degree max_degree.
TruncatedSeries golod_shafarevich_series(long n, long r, int max_degree);

struct GenericExperimentReport {
  std::size_t n = 0, r = 0;
  std::uint64_t p = 0, seed = 0;
  int max_degree = 0;
  int hom_bound = 0;
  std::vector<std::pair<std::string, bool>> checks;  // in the order performed
  TruncatedSeries hilbert{0};
  TruncatedSeries expected{0};
  bool genericity_failure = false;
  std::optional<FiltrationTable> table;
  std::optional<VerificationReport> verification;
  std::vector<std::string> log;

  /// Every check passed and the sample was generic.
  bool ok() const;
  bool check(const std::string& name) const;
};

/// r < n: the flag x_1 < ... < x_n together with J_t = l_1^n R + ... + l_t^n R.
GenericExperimentReport small_r_experiment(std::size_t n, std::size_t r, std::uint64_t p, std::uint64_t seed,
                                           int max_degree = 6, int i_max = 4);

/// n^2 - n < r <= n^2: the flag followed by `steps` rounds of annihilator
/// flags Ann(x^k_1) = x^{k+1}_1 R + ... + x^{k+1}_{n-s} R, s = n^2 - r.
GenericExperimentReport large_r_experiment(std::size_t n, std::size_t r, std::uint64_t p, std::uint64_t seed,
                                           int steps = 5, int max_degree = 4, int i_max = 4);

struct H1Obstruction {
  Polynomial series;  // H_1(I_p)(z)
  long q = 0, p = 0;  // r = q n + p
  bool negative = false;
};

/// With R(z) = 1/(1 - nz + rz^2), solves the flag recursion
/// I_{t+1}(z) = I_t(z) + z (R(z) - N_{t+1}(z)) for I_p(z) and returns
/// H_1(I_p)(z) = pz - I_p(z)/R(z).
H1Obstruction h1_obstruction_series(long n, long r);

}  // namespace koszulkit
