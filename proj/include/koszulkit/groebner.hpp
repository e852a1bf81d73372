#pragma once

// Two-sided noncommutative Groebner bases for homogeneous ideals,
// computed degree by degree up to a bound, with the reduction,
// overlap and certificate utilities built on top of them.

#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "koszulkit/freealg.hpp"
#include "koszulkit/presentation.hpp"

namespace koszulkit {

/// A monic, interreduced (partial) Groebner basis. Elements are in the
/// caller's letters; internally everything runs on ranked letters so
/// that raw deglex equals the chosen order.
class GroebnerBasis {
 public:
  GroebnerBasis(FieldSpec field, GenOrder order);

  const FieldSpec& field() const noexcept { return field_; }
  const GenOrder& order() const noexcept { return order_; }
  std::size_t num_generators() const noexcept { return order_.size(); }
  int degree_bound() const noexcept { return bound_; }
  /// True when every overlap of the basis was resolved, i.e. the basis is
  /// a full Groebner basis of the ideal.
  bool complete() const noexcept { return complete_; }
  /// Normal forms of words of degree d are trustworthy.
  bool valid_in_degree(int d) const noexcept { return complete_ || d <= bound_; }

  /// Elements sorted by increasing leading monomial.
  std::vector<NcPoly> elements() const;
  std::vector<Word> leading_monomials() const;
  std::size_t size() const noexcept { return ranked_.size(); }

  /// Reduces f by repeatedly rewriting its deglex-greatest reducible word
  /// at the leftmost occurrence of a leading monomial.
  NcPoly reduce(const NcPoly& f) const;
  bool is_normal(const Word& w) const;
  /// Memoised normal form of a single word (same result as reduce()).
  NcPoly normal_form(const Word& w) const;
  /// Normal words of a given degree in increasing deglex order.
  std::vector<Word> normal_words(int degree) const;

  /// Basis text: "# order: x<y<z, bound: D, complete: true" then one
  /// element per line.
  std::string render(const Presentation& pres) const;

  // Used by the completion routine.
  void set_state(std::vector<NcPoly> ranked_elements, int bound, bool complete);

 private:
  /// Leftmost occurrence (position, element) of a leading monomial in a
  /// ranked word.
  std::optional<std::pair<std::size_t, std::size_t>> find_reducer(const Word& ranked) const;
  NcPoly reduce_ranked(const NcPoly& f) const;
  NcPoly to_caller(const NcPoly& ranked) const;
  NcPoly to_ranked(const NcPoly& f) const;

  FieldSpec field_;
  GenOrder order_;
  int bound_ = 0;
  bool complete_ = true;
  std::vector<NcPoly> ranked_;
  std::vector<Word> ranked_lm_;
  std::vector<std::size_t> lm_lengths_;
  std::shared_ptr<std::unordered_map<Word, std::size_t, WordHash>> lm_index_;
  std::shared_ptr<std::mutex> memo_mutex_;
  std::shared_ptr<std::unordered_map<Word, NcPoly, WordHash>> memo_;
  bool identity_order_ = true;
};

/// Computes the basis up to degree `max_degree`.
GroebnerBasis groebner_complete(const FieldSpec& field, const std::vector<NcPoly>& relations,
                                const GenOrder& order, int max_degree);
GroebnerBasis groebner_complete(const Presentation& pres, int max_degree);

/// An ambiguity between two leading monomials.
struct Overlap {
  std::size_t first;   // element index (left factor)
  std::size_t second;  // element index (right factor)
  Word word;           // the ambiguous word
  bool inclusion;      // second's leading monomial occurs inside first's
  std::size_t offset;  // start of the second leading monomial inside word
  friend bool operator==(const Overlap&, const Overlap&) = default;
};

/// All overlaps among the leading monomials of `polys` (order `ord`),
/// sorted by (degree, first, second, word).
std::vector<Overlap> overlaps(const std::vector<NcPoly>& polys, const GenOrder& ord);
/// S-polynomial of an overlap, expressed in caller letters.
NcPoly s_polynomial(const std::vector<NcPoly>& polys, const GenOrder& ord, const Overlap& ov);

struct PbwVerdict {
  bool pbw = false;
  /// Ambiguous degree-3 word whose S-polynomial does not reduce to zero.
  std::optional<Word> witness;
  /// The interreduced quadratic relations.
  std::vector<NcPoly> quadratic_basis;
};

/// Decides whether the quadratic relations already form a Groebner basis
/// in the presentation's order. Throws NonQuadraticInput.
PbwVerdict pbw_certificate(const Presentation& pres);

struct ProcessingVerdict {
  bool holds = true;
  Word p;
  Word q;
  std::size_t split = 0;  // length of q1
};

/// Checks N(p q) = N(p q1) q2 for normal words p, q with
/// deg p + deg q <= max_degree, where q1 is the prefix of q of length
/// min(r, |q|). Enumeration: total degree, then |p|, then p, then q.
ProcessingVerdict restricted_processing_check(const GroebnerBasis& gb, int r, int max_degree);
/// The same identity for a single pair.
bool processing_identity_holds(const GroebnerBasis& gb, const Word& p, const Word& q, int r);

struct OverlapGraph {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  bool acyclic = true;
};

/// Edge g_i -> g_j when a suffix of a non-leading monomial of g_i is a
/// prefix of lm(g_j).
OverlapGraph overlap_graph(const GroebnerBasis& gb);

}  // namespace koszulkit
