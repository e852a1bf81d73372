#pragma once

// Minimal graded free resolutions of right modules over a quotient
// algebra, computed one internal degree at a time by exact linear
// algebra, and the invariants read off them: Tor tables H_i(M)_j,
// bounded Koszul certificates, rate estimates and Anick chains.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "koszulkit/ideals.hpp"

namespace koszulkit {

/// dim H_i(M)_j = dim Tor_i(M, k)_j for i <= i_max, j <= j_max.
struct TorTable {
  std::string module;
  int i_max = 0;
  int j_max = 0;
  std::map<std::pair<int, int>, std::size_t> dims;  // nonzero entries only

  std::size_t dim(int i, int j) const;
  /// t_i = top internal degree with H_i nonzero, -1 when H_i vanishes.
  int top_degree(int i) const;
  /// Rows i, columns j - i; "." marks zero.
  std::string betti_diagram() const;
};

/// A minimal resolution F_i -> ... -> F_0 -> I of a graded right ideal,
/// grown one internal degree per call to advance().
class MinimalResolution {
 public:
  MinimalResolution(GradedIdeal ideal, int i_max);

  int i_max() const noexcept { return i_max_; }
  int degree_done() const noexcept { return degree_done_; }
  /// Processes the next internal degree; returns (i, count) for every
  /// stage that gained generators in it.
  std::vector<std::pair<int, std::size_t>> advance();
  /// Minimal generators of F_i in internal degree j (= dim H_i(I)_j).
  std::size_t generators(int i, int j) const;
  /// dim (F_i)_j.
  std::size_t free_rank(int i, int j) const;

 private:
  struct Module {
    std::vector<int> degrees;               // generator degrees, nondecreasing
    std::vector<SparseVector> differential; // images of the generators
    std::vector<SparseVector> images;       // images of the basis at degree_done_
    std::vector<SparseVector> kernel;       // kernel of the differential at degree_done_
  };
  std::vector<std::size_t> offsets(const Module& m, int j) const;
  /// v in M_j times a generator, landing in M_{j+1}.
  SparseVector times_letter(const Module& m, int j, const std::vector<std::size_t>& from,
                            const std::vector<std::size_t>& to, const SparseVector& v, Letter x) const;

  GradedIdeal ideal_;
  int i_max_;
  int degree_done_ = -1;
  Module target_;               // R itself: one generator in degree 0
  std::vector<Module> stages_;  // F_0 .. F_{i_max}
  std::map<std::pair<int, int>, std::size_t> counts_;
};

/// Tor table of an ideal.
TorTable tor_table(const GradedIdeal& ideal, int i_max, int j_max, const std::string& module_id = "I");
/// Tor table of the trivial module k = R / R_+.
TorTable tor_table_trivial(std::shared_ptr<const QuotientAlgebra> ring, int i_max, int j_max);

struct KoszulVerdict {
  bool koszul = true;  // true = linear to the bounds
  int i = -1;          // first off-diagonal entry (by internal degree, then i)
  int j = -1;
  std::size_t dim = 0;
  int d = 0;           // generation degree
  int i_max = 0;
  int j_max = 0;
};

/// Scans internal degrees up to j_max = i_max + d + 1 and stops at the
/// first H_i(M)_j != 0 with j != i + d. Throws NotSingleDegreeGenerated.
KoszulVerdict koszul_certificate(const GradedIdeal& ideal, int i_max);
KoszulVerdict koszul_certificate_trivial(std::shared_ptr<const QuotientAlgebra> ring, int i_max);

/// max(1, max_{2 <= i <= i_max, H_i != 0} (t_i - 1)/(i - 1)) for a table of k.
Rational rate_estimate(const TorTable& trivial_table);

/// t_i(I) <= m + d i for every i <= i_max.
bool rate_bound_check(const TorTable& table, int m, int d);
/// Computes the table of I with j_max = m(I) + d i_max + 1 and checks it.
bool rate_bound_check(const GradedIdeal& ideal, int d, int i_max);

/// Anick chains of a quadratic monomial algebra: chains[i] are the words
/// of length i whose adjacent pairs are all relation monomials (chains[0]
/// is the empty word, chains[1] the generators). Throws
/// NonQuadraticMonomialInput.
std::vector<std::vector<Word>> anick_chains_quadratic_monomial(const Presentation& pres, int i_max);

}  // namespace koszulkit
