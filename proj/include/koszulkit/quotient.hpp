#pragma once

// The graded quotient R = F/I of a presentation: normal-word bases per
// degree, multiplication in normal-word coordinates, Hilbert functions
// and series, quadratic duals and (semi-)tensor products.

#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "koszulkit/groebner.hpp"
#include "koszulkit/linalg.hpp"
#include "koszulkit/presentation.hpp"
#include "koszulkit/series.hpp"

namespace koszulkit {

class QuotientAlgebra {
 public:
  /// Completes a Groebner basis of the relations up to `gb_bound`.
  QuotientAlgebra(Presentation pres, int gb_bound);
  QuotientAlgebra(Presentation pres, GroebnerBasis gb);

  const Presentation& presentation() const noexcept { return pres_; }
  const GroebnerBasis& gb() const noexcept { return gb_; }
  const FieldSpec& field() const noexcept { return pres_.field; }
  std::size_t num_generators() const noexcept { return pres_.num_generators(); }

  /// Degree d data is trustworthy (the basis is complete or d <= bound).
  bool available(int d) const noexcept { return d >= 0 && gb_.valid_in_degree(d); }
  /// Throws InsufficientGBBound when !available(d).
  void require(int d) const;

  /// Normal words of degree d, increasing in the presentation's order.
  const std::vector<Word>& normal_words(int d) const;
  std::size_t dim(int d) const { return normal_words(d).size(); }
  /// Position of a normal word inside normal_words(|w|); throws if w is
  /// not normal.
  std::uint32_t index_of(const Word& w) const;

  /// Coordinates of the class of a homogeneous polynomial of degree d.
  SparseVector coordinates(const NcPoly& f) const;
  SparseVector word_coordinates(const Word& w) const;
  /// The normal-form polynomial with the given degree-d coordinates.
  NcPoly element(int d, const SparseVector& v) const;

  /// (v in R_d) * x_g in R_{d+1}.
  SparseVector multiply_generator(int d, const SparseVector& v, Letter g) const;
  /// (v in R_d) * w for a word w.
  SparseVector multiply_word(int d, const SparseVector& v, const Word& w) const;
  /// (v in R_d) * (u in R_e).
  SparseVector multiply(int d, const SparseVector& v, int e, const SparseVector& u) const;
  /// Image of a basis word times a generator, cached.
  const SparseVector& basis_times_generator(int d, std::uint32_t index, Letter g) const;

  TruncatedSeries hilbert_function(int max_degree) const;

 private:
  struct DegreeData {
    std::vector<Word> words;
    std::unordered_map<Word, std::uint32_t, WordHash> index;
    std::vector<std::vector<SparseVector>> times;  // [generator][word index]
    bool times_ready = false;
  };
  DegreeData& data(int d) const;
  void ensure_times(int d) const;

  Presentation pres_;
  GroebnerBasis gb_;
  mutable std::unique_ptr<std::recursive_mutex> mutex_;
  mutable std::vector<std::unique_ptr<DegreeData>> degrees_;
};

/// Hilbert series of a monomial presentation, exact, by counting words
/// that avoid the relation monomials. Throws NonMonomialInput.
RationalFunction monomial_hilbert_ratfunc(const QuotientAlgebra& q);
RationalFunction monomial_hilbert_ratfunc(const Presentation& pres);
/// Series of an algebra with a complete Groebner basis, via its leading
/// monomials. Throws InsufficientGBBound when the basis is incomplete.
RationalFunction hilbert_ratfunc(const QuotientAlgebra& q);
/// Series of k<x_1..x_n> modulo the given monomials.
RationalFunction avoidance_series(std::size_t num_generators, const std::vector<Word>& forbidden);

/// Quadratic dual: generators renamed x -> x', relations spanning the
/// orthogonal complement of the relation space. Throws NonQuadraticInput.
Presentation quadratic_dual(const Presentation& pres);

/// Coefficients 0..D of R(z) R^!(-z) - 1.
TruncatedSeries froberg_check(const Presentation& pres, int max_degree);

/// A (x) B: generators of A then of B (clashing names of B get a
/// suffix), order with every generator of A above every generator of B,
/// relations of both plus all commutators x*y - y*x.
Presentation tensor_product(const Presentation& a, const Presentation& b);

/// lm G_C == lm G_A u lm G_B u {xy : x in X, y in Y} under the order
/// X > Y, compared in degrees up to `bound`. Returns false on a
/// certified mismatch; throws InsufficientGBBound when the sets agree up
/// to the bound but a basis is not complete.
bool semi_tensor_check(const Presentation& c, const Presentation& a, const Presentation& b, int bound = 3);

}  // namespace koszulkit
