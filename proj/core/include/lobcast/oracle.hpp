#pragma once

#include <cstdint>

#include "lobcast/tree.hpp"

namespace lobcast {

// Hard cap for the exact solver; larger instances are refused, never
// approximated.
inline constexpr int kOracleMaxVertices = 24;

struct OracleResult {
  std::int64_t beta_b = 0;
  BroadcastAssignment witness;  // valid independent broadcast attaining beta_b
  std::uint64_t explored = 0;   // candidate supports visited by the search
};

// Exact maximum cost of an independent broadcast, by enumerating every
// candidate support T:
//
// For a fixed support, independence constrains each pair u,v in T by
// dist(u,v) > f(u) and dist(u,v) > f(v), so the per-vertex maxima are
// independent given T: the best broadcast supported on T assigns each v
// the value min(ecc(v), min over other u in T of dist(u,v) - 1). Supports
// where any such value drops to 0 are infeasible (those pairs are
// adjacent); any superset is then infeasible too, which is the only
// structural prune. The optional bound prune discards branches whose
// optimistic completion cannot beat the incumbent; it never changes the
// result, and ties keep the lexicographically smallest support because the
// search visits supports in lexicographic order of their sorted vertex
// lists and only replaces the incumbent on strict improvement.
//
// Requires 2 <= n <= kOracleMaxVertices; throws TooLargeError above the cap.
OracleResult exact_beta_b(const Tree& tree, bool use_pruning = true);

// |A| * (diam - 1) for a greedily grown set A of pairwise antipodal
// vertices; at least 2 * (diam - 1). A sanity floor, not a solver.
std::int64_t lower_bound_antipodal(const Tree& tree);

}  // namespace lobcast
