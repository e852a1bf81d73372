#include "koszulkit/ideals.hpp"

#include "koszulkit/error.hpp"

namespace koszulkit {

GradedIdeal GradedIdeal::generated(std::shared_ptr<const QuotientAlgebra> ring, std::vector<NcPoly> gens,
                                   int max_degree) {
  GradedIdeal ideal(std::move(ring));
  for (NcPoly& g : gens) {
    if (g.is_zero()) continue;
    if (!(g.field() == ideal.ring_->field())) throw Error(ErrorCode::FieldMismatch, "generator over another field");
    if (!g.is_homogeneous()) throw Error(ErrorCode::InvalidArgument, "ideal generators must be homogeneous");
    ideal.gens_.push_back(std::move(g));
  }
  ideal.extend_to(max_degree);
  return ideal;
}

GradedIdeal GradedIdeal::sum(const GradedIdeal& base, std::vector<NcPoly> gens, int max_degree) {
  GradedIdeal ideal = generated(base.ring_, std::move(gens), -1);
  ideal.base_ = std::make_shared<GradedIdeal>(base);
  ideal.extend_to(max_degree);
  return ideal;
}

GradedIdeal GradedIdeal::colon(const NcPoly& x, const GradedIdeal& j, int max_degree) {
  if (x.is_zero() || !x.is_homogeneous() || x.degree() < 1)
    throw Error(ErrorCode::DegreeOutOfRange, "colon needs a homogeneous element of positive degree");
  GradedIdeal ideal(j.ring_);
  ideal.kind_ = Kind::Colon;
  ideal.x_ = x;
  ideal.x_degree_ = x.degree();
  ideal.base_ = std::make_shared<GradedIdeal>(j);
  ideal.extend_to(max_degree);
  return ideal;
}

GradedIdeal GradedIdeal::zero(std::shared_ptr<const QuotientAlgebra> ring, int max_degree) {
  return generated(std::move(ring), {}, max_degree);
}

GradedIdeal GradedIdeal::maximal(std::shared_ptr<const QuotientAlgebra> ring, int max_degree) {
  std::vector<NcPoly> gens;
  for (Letter g = 0; g < ring->num_generators(); ++g) gens.push_back(NcPoly::monomial(ring->field(), Word{g}));
  return generated(std::move(ring), std::move(gens), max_degree);
}

void GradedIdeal::extend_to(int max_degree) {
  while (computed_to() < max_degree) compute_next();
}

void GradedIdeal::compute_next() {
  const QuotientAlgebra& r = *ring_;
  const int d = computed_to() + 1;
  EchelonBasis comp(r.field(), r.dim(d));
  if (kind_ == Kind::Generated) {
    if (base_) {
      base_->extend_to(d);
      comp = base_->component(d);
    }
    if (d > 0) {
      const EchelonBasis& below = components_.back();
      for (const SparseVector& row : below.rows())
        for (Letter g = 0; g < r.num_generators(); ++g) comp.insert(r.multiply_generator(d - 1, row, g));
    }
    for (const NcPoly& g : gens_)
      if (g.degree() == d) comp.insert(r.coordinates(g));
  } else {
    GradedIdeal& j = *base_;
    j.extend_to(d + x_degree_);
    const EchelonBasis& target = j.component(d + x_degree_);
    std::vector<SparseVector> images;
    if (d == 0) {
      images.push_back(target.reduce(r.coordinates(x_)));
    } else {
      // Words of degree d extend words of degree d-1 by one letter, in order.
      const auto& words = r.normal_words(d);
      images.reserve(words.size());
      for (const Word& w : words) {
        Word head = w.prefix(w.size() - 1);
        const SparseVector& img = images_.at(r.index_of(head));
        images.push_back(target.reduce(r.multiply_generator(d - 1 + x_degree_, img, w.back())));
      }
    }
    for (const SparseVector& k : kernel(r.field(), images)) comp.insert(k);
    images_ = std::move(images);
  }
  components_.push_back(std::move(comp));
}

const EchelonBasis& GradedIdeal::component(int d) const {
  if (d < 0 || d > computed_to())
    throw Error(ErrorCode::DegreeOutOfRange, "ideal component " + std::to_string(d) + " not computed (computed to " +
                                                 std::to_string(computed_to()) + ")");
  return components_[static_cast<std::size_t>(d)];
}

bool GradedIdeal::contains(const NcPoly& f) const {
  if (f.is_zero()) return true;
  if (!f.is_homogeneous()) throw Error(ErrorCode::InvalidArgument, "membership needs a homogeneous polynomial");
  return component(f.degree()).contains(ring_->coordinates(f));
}

bool GradedIdeal::is_unit() const { return computed_to() >= 0 && component(0).rank() == 1; }

bool GradedIdeal::is_zero_to(int max_degree) const {
  for (int d = 0; d <= max_degree; ++d)
    if (component(d).rank() != 0) return false;
  return true;
}

bool GradedIdeal::contained_in(const GradedIdeal& other, int max_degree) const {
  for (int d = 0; d <= max_degree; ++d)
    if (!other.component(d).contains_all(component(d))) return false;
  return true;
}

bool GradedIdeal::equals(const GradedIdeal& other, int max_degree) const {
  for (int d = 0; d <= max_degree; ++d)
    if (!(component(d) == other.component(d))) return false;
  return true;
}

EchelonBasis GradedIdeal::products_from_below(int d) const {
  EchelonBasis span(ring_->field(), ring_->dim(d));
  if (d == 0) return span;
  for (const SparseVector& row : component(d - 1).rows())
    for (Letter g = 0; g < ring_->num_generators(); ++g) span.insert(ring_->multiply_generator(d - 1, row, g));
  return span;
}

MinGenerators GradedIdeal::min_generators(int max_degree) const {
  MinGenerators out;
  for (int d = 0; d <= max_degree; ++d) {
    std::size_t count = component(d).rank() - products_from_below(d).rank();
    if (count) {
      out.counts.emplace_back(d, count);
      out.m = d;
    }
  }
  return out;
}

std::vector<NcPoly> GradedIdeal::minimal_generators(int max_degree) const {
  std::vector<NcPoly> out;
  for (int d = 0; d <= max_degree; ++d) {
    EchelonBasis span = products_from_below(d);
    for (const SparseVector& row : component(d).rows())
      if (span.insert(row)) out.push_back(ring_->element(d, row));
  }
  return out;
}

bool GradedIdeal::degree_one_generated(int max_degree) const {
  for (const auto& [d, c] : min_generators(max_degree).counts)
    if (d != 1) return false;
  return true;
}

GradedIdeal ideal_from_generators(std::shared_ptr<const QuotientAlgebra> ring, std::vector<NcPoly> gens,
                                  int max_degree) {
  return GradedIdeal::generated(std::move(ring), std::move(gens), max_degree);
}

bool membership(const NcPoly& f, const GradedIdeal& ideal) { return ideal.contains(f); }

MinGenerators min_generators(const GradedIdeal& ideal, int max_degree) { return ideal.min_generators(max_degree); }

GradedIdeal colon_ideal(const NcPoly& x, const GradedIdeal& j, int max_degree) {
  return GradedIdeal::colon(x, j, max_degree);
}

Presentation opposite_transform(const Presentation& pres) {
  std::vector<NcPoly> relations;
  for (const NcPoly& f : pres.relations) relations.push_back(f.map_words([](const Word& w) { return w.reversed(); }));
  return Presentation::make(pres.names, pres.field, pres.order, std::move(relations));
}

}  // namespace koszulkit
