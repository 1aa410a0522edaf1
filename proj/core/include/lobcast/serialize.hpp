#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lobcast/beta_star.hpp"
#include "lobcast/conformance.hpp"
#include "lobcast/construct.hpp"
#include "lobcast/lobster.hpp"
#include "lobcast/oracle.hpp"

namespace lobcast {

// All JSON text the project emits or accepts goes through here, with fixed
// field order, so identical inputs produce byte-identical outputs.

// {"subtrees":[{"type":"S1","leaves":m}|{"type":"S2","branches":[c,...]}]}
std::string spec_to_json(const LobsterSpec& spec);
LobsterSpec spec_from_json(const std::string& text);

// Sparse {"vertex": value} map of the positive entries, keys ascending.
std::string assignment_to_json(const BroadcastAssignment& f);
// Accepts the sparse map directly or any object carrying it under
// "assignment" (e.g. saved `construct` output).
BroadcastAssignment assignment_from_json(const std::string& text, int n);

std::string validation_to_json(const LobsterStructure& s, const ValidationResult& uniform,
                               const ValidationResult& two_lobster);

std::string classification_to_json(const std::vector<SubtreeType>& types,
                                   const std::vector<T4Sequence>& sequences);

std::string report_to_json(const BetaStarReport& report);

// Full trace by default; stage in 1..4 selects one intermediate assignment.
std::string construct_to_json(const ConstructionTrace& trace, int stage = 0);

std::string verification_to_json(int n, std::int64_t assignment_cost, bool broadcast,
                                 bool independent, bool dominating);

std::string oracle_to_json(const OracleResult& result);

std::string conformance_to_json(const ConformanceReport& report, const std::string& source);

std::string bench_to_json(const std::vector<std::pair<std::int64_t, double>>& rows);

// DOT text with the spine vertices ranked in one row; when an assignment is
// given every vertex is labeled with its f-value.
std::string export_dot(const LobsterStructure& s, const BroadcastAssignment* f = nullptr);

}  // namespace lobcast
