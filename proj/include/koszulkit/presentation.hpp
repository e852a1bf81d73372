#pragma once

// Finitely presented graded algebras k<x_1..x_n>/(relations) and their
// text form:
//
//   field rational            | field prime <p>
//   generators x y z          (listing order = ascending order)
//   order z x y               (optional reordering, ascending)
//   relations
//     y*x - 2/3 x*y
//   end

#include <string>
#include <string_view>
#include <vector>

#include "koszulkit/freealg.hpp"

namespace koszulkit {

struct Presentation {
  std::vector<std::string> names;
  FieldSpec field;
  GenOrder order;
  std::vector<NcPoly> relations;

  /// Builds and validates: relations nonzero, homogeneous, degree >= 2,
  /// letters in range; at least one generator.
  static Presentation make(std::vector<std::string> names, FieldSpec field, GenOrder order,
                           std::vector<NcPoly> relations);
  static Presentation make(std::vector<std::string> names, FieldSpec field, std::vector<NcPoly> relations);

  std::size_t num_generators() const noexcept { return names.size(); }
  void validate() const;
  bool all_quadratic() const;
  bool all_monomial() const;
  Presentation with_order(const GenOrder& ord) const;

  std::string render_word(const Word& w) const;
  std::string render_poly(const NcPoly& f) const;
  /// Canonical file text; parse_presentation(render()) reproduces *this.
  std::string render() const;

  friend bool operator==(const Presentation& a, const Presentation& b) = default;
};

Presentation parse_presentation(std::string_view text);
Presentation load_presentation(const std::string& path);

/// Parses one polynomial over the presentation's names and field.
NcPoly parse_poly(std::string_view text, const std::vector<std::string>& names, const FieldSpec& field,
                  std::size_t line = 1);

/// Parses a word "x*y*x" ("1" is the empty word).
Word parse_word(std::string_view text, const std::vector<std::string>& names);

}  // namespace koszulkit
