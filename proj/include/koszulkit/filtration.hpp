#pragma once

// Koszul and rate filtrations as explicit finite tables of right ideals
// I = J + xR with colon ideals (x : J), their bounded verification, the
// constructions that produce them, and the Hilbert series they force.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "koszulkit/homology.hpp"

namespace koszulkit {

enum class FiltrationKind { Koszul, Rate };

struct FiltrationEntry {
  std::string parent;  // J
  NcPoly x;
  std::string colon;   // N = (x : J)
};

struct FiltrationTable {
  std::shared_ptr<const QuotientAlgebra> ring;
  FiltrationKind kind = FiltrationKind::Koszul;
  int degree = 1;  // d: bound on generator degrees
  /// Ideal id -> generators. Ids are listed in insertion order by `ids`.
  std::map<std::string, std::vector<NcPoly>> ideals;
  std::vector<std::string> ids;
  std::map<std::string, FiltrationEntry> entries;
  /// Ids whose colon lies outside a bounded unrolling; their colon link is
  /// not checked and they are reported, not counted as violations.
  std::set<std::string> truncated;

  void add_ideal(const std::string& id, std::vector<NcPoly> gens);
  void add_entry(const std::string& id, const std::string& parent, NcPoly x, const std::string& colon);
};

struct VerificationReport {
  bool valid = true;
  std::vector<std::string> violations;
  std::vector<std::string> notes;
  /// 0 = I_0 < I_1 < ... < R_+ extracted by following parents from R_+.
  std::vector<std::string> flag_chain;
  std::map<std::string, KoszulVerdict> certificates;
  std::map<std::string, int> generator_degree;  // m(I)
  int internal_bound = 0;
  int hom_bound = 0;
};

/// Checks closure (I = J + xR, colon links, m(J) <= m(I), acyclic
/// parents, zero and maximal ideals present) up to internal degree
/// `max_degree`, then for the Koszul kind degree-one generation and
/// Koszul certificates to `i_max`, for the rate kind m(I) <= d and the
/// bound t_i(I) <= m(I) + d i.
VerificationReport verify_filtration(const FiltrationTable& table, int max_degree, int i_max);

/// All 2^n ideals generated by subsets of the generators of a quadratic
/// monomial algebra; the witness of a subset is its largest generator.
/// Throws ColonNotSubsetGenerated if some colon is not subset-generated
/// (checked through degree `check_degree`).
FiltrationTable monomial_subset_filtration(const Presentation& pres, int check_degree = 4);
FiltrationTable monomial_subset_filtration(std::shared_ptr<const QuotientAlgebra> ring, int check_degree = 4);

/// All right ideals generated by monomials of degree <= d of a monomial
/// algebra, each reached by adding its largest generator; a rate
/// filtration of degree d when the table closes (throws
/// ColonNotSubsetGenerated otherwise). Ideals are compared through
/// degree `check_degree`.
FiltrationTable monomial_rate_filtration(std::shared_ptr<const QuotientAlgebra> ring, int d, int check_degree);

/// The flag 0 < x_1 R < ... < R_+ of generators in increasing order
/// `ord`. Colons that are not flag members are reported in `missing`.
struct FlagTable {
  FiltrationTable table;
  std::vector<std::string> missing;  // flag ids whose colon is outside the flag
};
FlagTable flag_filtration(std::shared_ptr<const QuotientAlgebra> ring, const GenOrder& ord, int check_degree);

/// Series R(z) and I(z) forced by a filtration through
/// I(z) = J(z) + z^c (R(z) - N(z)).
struct FiltrationSeries {
  RationalFunction algebra;
  std::map<std::string, RationalFunction> ideals;
  int distinct_nonzero = 0;  // s
  int degree_bound = 0;      // d * s
};
/// Throws SingularSystem; InvariantViolation if the degree bound fails.
FiltrationSeries hilbert_from_filtration(const FiltrationTable& table);

struct InitKoszulVerdict {
  enum class Reason { None, NotPBW, Segment };
  bool yes = false;
  Reason reason = Reason::None;
  std::optional<Word> pbw_witness;
  int k = 0, j = 0, i = 0;  // 1-based positions in the order: x_k x_j in lm G but x_k x_i not
};

/// PBW in `ord` and: x_k x_j in lm G implies x_k x_i in lm G for i < j.
InitKoszulVerdict initially_koszul_criterion(const Presentation& pres, const GenOrder& ord);

struct SearchResult {
  bool found = false;
  GenOrder order;
  std::size_t tried = 0;
};
/// Tries generator orders in lexicographic order, skipping orders that
/// only permute generators occurring in no relation. Throws
/// SearchLimitExceeded for more than `limit` generators.
SearchResult initially_koszul_search(const Presentation& pres, std::size_t limit = 8);

/// Criterion of the quadratic dual of a monomial algebra under the
/// reversed order.
bool monomial_dual_flag_check(const Presentation& pres, const GenOrder& ord);

struct SingleRelationForm {
  enum class Form { XnX1, X1Squared };
  bool supported = false;
  Form form = Form::XnX1;
  Matrix change{FieldSpec(), 0, 0};  // x_i -> sum_j M(i, j) x_j
  NcPoly transformed;
};
/// Linear change of generators bringing a quadratic relation to leading
/// monomial x_n x_1 (or to c x_1^2). Unsupported (supported = false)
/// when no suitable isotropic vector is found over the ground field.
SingleRelationForm single_relation_normalize(const NcPoly& f, std::size_t num_generators);

}  // namespace koszulkit
