#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lobcast/lobster.hpp"

namespace lobcast {

// The six mutually exclusive subtree types. An S1 subtree is Xa (three or
// more leaves), G (two leaves, some S1 neighbor) or Xc (two leaves, S2
// neighbors on both sides). An S2 subtree is Fa (no small branch), Xb
// (exactly one branch with at most two leaves) or Yc (two or more such
// branches).
enum class SubtreeType { Fa, G, Xa, Xb, Xc, Yc };

const char* to_string(SubtreeType t);

// How far a subtree's broadcast values reach along the spine after the
// third construction stage: 0 for Fa/G/Xa, 1 for Xb/Yc, 2 for Xc. Spine
// vertices within that radius of the subtree cannot broadcast.
int exceed_class(SubtreeType t);

// Maximal alternating run A_0 X_1 A_1 ... X_p A_p of subtrees, where every
// A position is Fa and every X position is Xa, Xb, Xc or Fa, bounded by
// contexts that leave the A endpoints free to broadcast.
struct T4Sequence {
  int start = 0;  // index of A_0
  int end = 0;    // index of A_p; end - start == 2p
  int p = 0;
  std::vector<SubtreeType> x_roles;  // types at the X positions, left to right
  int bxc_count = 0;                 // X positions of type Xb or Xc

  std::int64_t value() const { return static_cast<std::int64_t>(p) + 1 - bxc_count; }
  bool is_a_position(int i) const { return i >= start && i <= end && (i - start) % 2 == 0; }
  bool is_x_position(int i) const { return i > start && i < end && (i - start) % 2 == 1; }
};

// Assigns each subtree its unique type. Requires a validated locally
// uniform 2-lobster; also asserts that no G or Xa subtree neighbors an Xc.
std::vector<SubtreeType> classify_all(const LobsterStructure& s);

// Left-to-right scan for the alternating runs described above.
//
// At each Fa position i not yet consumed, the longest run i, i+2, ... with
// Fa at even offsets and Xa/Xb/Xc/Fa at odd offsets is grown, then the
// contexts are checked: the position before the run must not exceed (class
// 0), must not already be the endpoint of an emitted run, and the position
// two before must not be Xc; symmetrically on the right. Runs that pass are
// emitted and consumed, so emitted runs are pairwise disjoint and no two
// endpoints are ever adjacent.
std::vector<T4Sequence> find_t4_sequences(const std::vector<SubtreeType>& types);

}  // namespace lobcast
