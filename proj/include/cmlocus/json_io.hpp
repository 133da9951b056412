#pragma once

#include <json.hpp>

#include "cmlocus/arrangement.hpp"
#include "cmlocus/locus.hpp"
#include "cmlocus/solver.hpp"

// Interchange formats.
//
// Arrangement:  {"multiplicities": [int, ...], "thetas": [float, ...]}
//               (radians, representatives in [0, 2*pi), matching lengths)
// SolveResult:  Arrangement keys plus "gradient_inf_norm", "iterations",
//               "potential"
// LocusReport:  {"lines": [...], "first_locus_pass", "all_locus_pass",
//               "coarsely_coxeter", "tolerance"}
//
// Doubles are emitted in shortest round-trip form, so parsing the output
// reproduces the exact bit pattern; unknown keys are ignored on input.

namespace cmlocus {

nlohmann::json arrangement_to_json(const Arrangement& a);

/// Throws std::invalid_argument on any schema violation.
Arrangement arrangement_from_json(const nlohmann::json& j);

nlohmann::json solve_result_to_json(const SolveResult& r);

nlohmann::json locus_report_to_json(const LocusReport& r);

Arrangement load_arrangement(const std::string& path);

void save_json(const nlohmann::json& j, const std::string& path);

}  // namespace cmlocus
