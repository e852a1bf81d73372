#pragma once

// Command-line workbench. run() is the whole program minus process
// plumbing, so tests can drive it in-process.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "koszulkit/filtration.hpp"

namespace koszulkit::cli {

/// Exit codes: 0 positive or computed, 1 negative verdict, 2 error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Filtration tables as JSON: {"ideals": {id: {"gens": [...]}}, "entries":
/// {id: {"parent", "x", "colon"}}} plus optional "kind", "degree" and
/// "truncated".
nlohmann::ordered_json filtration_to_json(const FiltrationTable& table);
FiltrationTable filtration_from_json(const nlohmann::ordered_json& doc, std::shared_ptr<const QuotientAlgebra> ring);

/// Right-ideal generator files: one polynomial per line, '#' comments.
std::vector<NcPoly> parse_ideal_generators(const std::string& text, const Presentation& pres);

}  // namespace koszulkit::cli
