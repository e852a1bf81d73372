#pragma once

// Graded right ideals of a quotient algebra, stored extensionally as one
// reduced echelon subspace of R_d per degree d.

#include <memory>
#include <optional>
#include <vector>

#include "koszulkit/quotient.hpp"

namespace koszulkit {

struct MinGenerators {
  std::vector<std::pair<int, std::size_t>> counts;  // (degree, count), nonzero counts only
  int m = -1;                                       // top generator degree, -1 for the zero ideal
};

class GradedIdeal {
 public:
  /// gens * R.
  static GradedIdeal generated(std::shared_ptr<const QuotientAlgebra> ring, std::vector<NcPoly> gens,
                               int max_degree);
  /// base + gens * R.
  static GradedIdeal sum(const GradedIdeal& base, std::vector<NcPoly> gens, int max_degree);
  /// (x : j) = { a : x a in j }; x homogeneous of positive degree.
  static GradedIdeal colon(const NcPoly& x, const GradedIdeal& j, int max_degree);
  static GradedIdeal zero(std::shared_ptr<const QuotientAlgebra> ring, int max_degree);
  /// The augmentation ideal generated by all generators.
  static GradedIdeal maximal(std::shared_ptr<const QuotientAlgebra> ring, int max_degree);

  const QuotientAlgebra& ring() const noexcept { return *ring_; }
  const std::shared_ptr<const QuotientAlgebra>& ring_ptr() const noexcept { return ring_; }
  int computed_to() const noexcept { return static_cast<int>(components_.size()) - 1; }
  /// Computes further components (also extends the ideals it depends on).
  void extend_to(int max_degree);

  /// Throws DegreeOutOfRange past computed_to().
  const EchelonBasis& component(int d) const;
  std::size_t dim(int d) const { return component(d).rank(); }
  bool contains(const NcPoly& f) const;
  bool contains(int d, const SparseVector& v) const { return component(d).contains(v); }
  /// Contains 1 (the colon of an element already in the ideal).
  bool is_unit() const;
  bool is_zero_to(int max_degree) const;
  /// Component-wise inclusion / equality up to a degree.
  bool contained_in(const GradedIdeal& other, int max_degree) const;
  bool equals(const GradedIdeal& other, int max_degree) const;

  /// Span of I_{d-1} R_1 inside R_d.
  EchelonBasis products_from_below(int d) const;
  /// Minimal generator counts in degrees 0..max_degree.
  MinGenerators min_generators(int max_degree) const;
  /// A minimal generating set in degrees <= max_degree (complements of
  /// I_{d-1} R_1 in I_d).
  std::vector<NcPoly> minimal_generators(int max_degree) const;
  bool degree_one_generated(int max_degree) const;

 private:
  enum class Kind { Generated, Colon };
  explicit GradedIdeal(std::shared_ptr<const QuotientAlgebra> ring) : ring_(std::move(ring)) {}
  void compute_next();

  std::shared_ptr<const QuotientAlgebra> ring_;
  Kind kind_ = Kind::Generated;
  std::shared_ptr<GradedIdeal> base_;  // summand (Generated) or J (Colon)
  std::vector<NcPoly> gens_;
  NcPoly x_;
  int x_degree_ = 0;
  std::vector<SparseVector> images_;  // Colon: x*w mod J for the last computed degree
  std::vector<EchelonBasis> components_;
};

GradedIdeal ideal_from_generators(std::shared_ptr<const QuotientAlgebra> ring, std::vector<NcPoly> gens,
                                  int max_degree);
bool membership(const NcPoly& f, const GradedIdeal& ideal);
MinGenerators min_generators(const GradedIdeal& ideal, int max_degree);
GradedIdeal colon_ideal(const NcPoly& x, const GradedIdeal& j, int max_degree);

/// Reverses every relation word, so right ideals of the result are left
/// ideals of the original.
Presentation opposite_transform(const Presentation& pres);

}  // namespace koszulkit
