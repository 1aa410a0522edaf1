#pragma once

#include <cstdint>
#include <vector>

#include "lobcast/beta_star.hpp"
#include "lobcast/classify.hpp"
#include "lobcast/lobster.hpp"
#include "lobcast/tree.hpp"

namespace lobcast {

// The staged optimal independent broadcast. Spine length 0 produces a
// single stage; otherwise the four stages f1..f4 are kept so each can be
// verified on its own. Costs are non-decreasing and the final cost equals
// beta_star.
struct ConstructionTrace {
  std::vector<BroadcastAssignment> stages;
  std::vector<std::int64_t> costs;
  std::int64_t final_cost = 0;

  const BroadcastAssignment& final_stage() const { return stages.back(); }
};

// Spine length 0: per branch, a branch with at most two leaves puts 3 on
// one leaf (sister silent), a branch with three or more leaves puts 1 on
// every leaf; the root gets 1 iff the subtree is type Fa.
BroadcastAssignment construct_k0(const LobsterStructure& s);

// Stage 1: only-leaves get 2, every other leaf gets 1.
BroadcastAssignment step1(const LobsterStructure& s);

// Stage 2: in every S2 subtree, each branch with at most two 2-leaves puts
// 3 on one leaf and silences its sister.
BroadcastAssignment step2(const LobsterStructure& s, const BroadcastAssignment& f1);

// Stage 3: every Xc subtree puts 3 on one leaf and silences the sister.
BroadcastAssignment step3(const LobsterStructure& s, const std::vector<SubtreeType>& types,
                          const BroadcastAssignment& f2);

// Stage 4: within each sequence, A-position roots get 1, X-position Xb
// drops its raised leaf from 3 to 2, X-position Xc spreads (3,0) to (1,1);
// Xa and Fa at X positions are untouched.
BroadcastAssignment step4(const LobsterStructure& s, const std::vector<SubtreeType>& types,
                          const std::vector<T4Sequence>& sequences, const BroadcastAssignment& f3);

// Dispatches on spine length, verifies every stage is an independent
// broadcast and that the final cost equals beta_star. Throws
// VerificationError naming the failing stage and predicate.
ConstructionTrace construct(const LobsterStructure& s);

// Largest e >= 0 such that the subtree holds a 1-leaf valued e+1 or a
// 2-leaf valued e+2 under f.
int exceed_by(const LobsterStructure& s, int subtree_index, const BroadcastAssignment& f);

}  // namespace lobcast
