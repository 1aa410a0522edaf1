#pragma once

#include <cstdint>
#include <vector>

#include "lobcast/classify.hpp"
#include "lobcast/lobster.hpp"

namespace lobcast {

struct NuValues {
  std::int64_t nu1 = 0;  // 1-leaves + 2-leaves + 2-only-leaves (only-leaves count twice)
  std::int64_t nu2 = 0;  // small branches (at most two 2-leaves) in S2 subtrees
  std::int64_t nu3 = 0;  // Xc subtrees
  std::int64_t nu4 = 0;  // sum of sequence values

  std::int64_t total() const { return nu1 + nu2 + nu3 + nu4; }
};

struct BetaStarReport {
  std::int64_t nu1 = 0;
  std::int64_t nu2 = 0;
  std::int64_t nu3 = 0;
  std::int64_t nu4 = 0;
  std::int64_t beta_star = 0;
  std::vector<std::int64_t> per_subtree;
  std::vector<SubtreeType> types;
  std::vector<T4Sequence> sequences;
};

// Single census pass, O(k + total branches); never builds distance tables.
NuValues compute_nus(const LobsterStructure& s, const std::vector<SubtreeType>& types,
                     const std::vector<T4Sequence>& sequences);

// Equivalent decomposition into one value per subtree:
//   G, Xa        -> lambda1
//   Xb           -> lambda2 + lambda2* + alpha2*   (minus 1 at an X position)
//   Xc           -> 3                              (2 at an X position)
//   Yc           -> lambda2 + lambda2* + alpha2*
//   Fa           -> lambda2                        (plus 1 at an A position)
std::vector<std::int64_t> per_subtree_values(const LobsterStructure& s,
                                             const std::vector<SubtreeType>& types,
                                             const std::vector<T4Sequence>& sequences);

// Full report; throws DecompositionMismatchError if the two decompositions
// disagree (implementation bug signal, never valid output).
BetaStarReport beta_star(const LobsterStructure& s);

}  // namespace lobcast
