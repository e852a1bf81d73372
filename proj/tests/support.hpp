#pragma once

// Independent oracles shared by the unit and acceptance tests. Nothing
// here uses Groebner bases: ideal components are spanned directly by all
// products a*f*b and counted with plain linear algebra.

#include <random>
#include <string>
#include <vector>

#include "koszulkit/linalg.hpp"
#include "koszulkit/presentation.hpp"
#include "koszulkit/series.hpp"

namespace oracle {

using namespace koszulkit;

inline Presentation pres(const std::string& text) { return parse_presentation(text); }

/// All words of length d over n letters, in raw lexicographic order.
inline std::vector<Word> all_words(std::size_t n, int d) {
  std::vector<Word> out{Word{}};
  for (int k = 0; k < d; ++k) {
    std::vector<Word> next;
    for (const Word& w : out)
      for (Letter x = 0; x < n; ++x) next.push_back(w * x);
    out = std::move(next);
  }
  return out;
}

inline std::uint32_t word_index(const Word& w, std::size_t n) {
  std::uint32_t idx = 0;
  for (Letter l : w.letters()) idx = idx * static_cast<std::uint32_t>(n) + l;
  return idx;
}

inline SparseVector to_vector(const NcPoly& f, std::size_t n) {
  std::vector<std::pair<std::uint32_t, Scalar>> v;
  for (const auto& [w, c] : f.terms()) v.emplace_back(word_index(w, n), c);
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

/// Degree-d component of the two-sided ideal generated by the relations.
inline EchelonBasis ideal_component(const Presentation& p, int d) {
  const std::size_t n = p.num_generators();
  std::size_t dim = 1;
  for (int k = 0; k < d; ++k) dim *= n;
  EchelonBasis span(p.field, dim);
  for (const NcPoly& f : p.relations) {
    int df = f.degree();
    if (df > d) continue;
    for (int la = 0; la <= d - df; ++la)
      for (const Word& a : all_words(n, la))
        for (const Word& b : all_words(n, d - df - la)) span.insert(to_vector(f.sandwich(a, b), n));
  }
  return span;
}

/// dim R_0..R_D of the quotient, by brute force.
inline std::vector<long> hilbert(const Presentation& p, int D) {
  std::vector<long> out;
  std::size_t total = 1;
  for (int d = 0; d <= D; ++d) {
    out.push_back(static_cast<long>(total - ideal_component(p, d).rank()));
    total *= p.num_generators();
  }
  return out;
}

inline TruncatedSeries series(const std::vector<long>& v) {
  std::vector<Rational> c;
  for (long x : v) c.emplace_back(x);
  return TruncatedSeries(std::move(c));
}

/// Random set of quadratic monomials on n generators a, b, c, ...
inline Presentation random_quadratic_monomial(std::mt19937_64& rng, std::size_t n, double density = 0.35) {
  std::vector<NcPoly> rels;
  std::bernoulli_distribution pick(density);
  for (Letter a = 0; a < n; ++a)
    for (Letter b = 0; b < n; ++b)
      if (pick(rng)) rels.push_back(NcPoly::monomial(FieldSpec::rationals(), Word{a, b}));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return Presentation::make(names, FieldSpec::rationals(), rels);
}

}  // namespace oracle
