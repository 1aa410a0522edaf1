#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lobcast/tree.hpp"

namespace lobcast {

// Depth class of a spine subtree: S1 if every branch is a single pendent
// vertex, S2 if every branch reaches depth 2. Mixed marks non-uniform
// subtrees so the uniformity validator can report them.
enum class DepthClass { S1, S2, Mixed };

// One branch of a spine subtree: the subtree hanging off a single non-spine
// neighbor of the spine vertex.
struct Branch {
  int attach_vertex = -1;  // the neighbor w of the spine vertex
  int depth = 0;           // 1: attach_vertex is itself a leaf; 2: it is a middle vertex
  int two_leaf_count = 0;  // leaves below the middle vertex (0 for depth 1)
};

// Census of the maximal subtree rooted at one spine vertex.
struct SpineSubtree {
  int index = 0;
  int root = -1;
  std::vector<Branch> branches;  // sorted by (depth, two_leaf_count, attach_vertex)
  DepthClass depth_class = DepthClass::Mixed;
  int lambda1 = 0;       // 1-leaves (pendent neighbors of the spine vertex)
  int lambda2 = 0;       // 2-leaves
  int lambda2_star = 0;  // 2-only-leaves (sole leaf of their middle vertex)
  int alpha2_star = 0;   // depth-2 branches with at most two 2-leaves
  int b = 0;             // branch count
};

// Spine plus per-spine-vertex subtree decomposition of a lobster.
struct LobsterStructure {
  std::shared_ptr<const Tree> tree;
  std::vector<int> spine;  // v_0 .. v_k
  int k = 0;
  std::vector<SpineSubtree> subtrees;
  std::int64_t lambda1_total = 0;
  std::int64_t lambda2_total = 0;
  std::int64_t lambda2_star_total = 0;
};

// Instance description: per-subtree class and leaf layout. S1 entries carry
// the 1-leaf count, S2 entries the per-branch 2-leaf counts. Local
// uniformity is true by construction of the schema.
struct SubtreeSpec {
  DepthClass kind = DepthClass::S2;
  int leaves = 0;             // S1 only
  std::vector<int> branches;  // S2 only
};

struct LobsterSpec {
  std::vector<SubtreeSpec> subtrees;
};

struct ValidationResult {
  bool ok = true;
  std::vector<int> violations;  // offending subtree indexes
};

// Strips leaves once, checks the remainder is a caterpillar, reconstructs
// the spine and partitions every remaining vertex into branches. The spine
// orientation is canonicalized: of the two possible directions, the one
// whose per-subtree census sequence compares lexicographically smaller wins.
// Throws TooSmallError, EmptySpineError or NotALobsterError.
LobsterStructure recognize_lobster(Tree tree);
LobsterStructure recognize_lobster(std::shared_ptr<const Tree> tree);

// True iff within each subtree all branches share one depth.
ValidationResult validate_locally_uniform(const LobsterStructure& s);

// True iff every subtree has at least two branches.
ValidationResult validate_two_lobster(const LobsterStructure& s);

// Throws SpecViolationError naming the offending field if the spec does not
// describe a locally uniform 2-lobster (>=2 branches everywhere, positive
// leaf counts, S2 subtrees at both ends).
void validate_spec(const LobsterSpec& spec);

// Materializes the tree with canonical vertex numbering (spine first, then
// per-subtree branches in given order, middles before their leaves) and the
// matching structure. Round-trips with recognize_lobster up to reversal.
LobsterStructure build_tree_from_spec(const LobsterSpec& spec);

// Census of a structure as a spec (branch counts in canonical order).
LobsterSpec spec_from_structure(const LobsterStructure& s);

// Spec with the subtree order reversed.
LobsterSpec reversed(const LobsterSpec& spec);

// Vertex count the spec will materialize to.
int spec_vertex_count(const LobsterSpec& spec);

// Orientation-comparison key: one row per subtree, rows compare
// lexicographically. Used for canonicalization and reversal dedup.
std::vector<std::vector<int>> census_profile(const LobsterStructure& s);
std::vector<std::vector<int>> census_profile(const LobsterSpec& spec);

// Leaf ids of one branch, ascending. Depth-1 branches yield the attach
// vertex itself.
std::vector<int> branch_leaves(const LobsterStructure& s, const SpineSubtree& st, const Branch& br);

}  // namespace lobcast
