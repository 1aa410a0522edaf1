#include "lobcast/construct.hpp"

#include <algorithm>
#include <string>

#include "lobcast/errors.hpp"

namespace lobcast {

namespace {

// Branches are sorted, so "one leaf" always means the smallest-id leaf of
// the branch; golden-file tests rely on this.
int chosen_leaf(const LobsterStructure& s, const SpineSubtree& st, const Branch& br) {
  return branch_leaves(s, st, br).front();
}

void raise_small_branch(const LobsterStructure& s, const SpineSubtree& st, const Branch& br,
                        BroadcastAssignment& f, std::int64_t value) {
  std::vector<int> leaves = branch_leaves(s, st, br);
  f[leaves.front()] = value;
  for (std::size_t j = 1; j < leaves.size(); ++j) f[leaves[j]] = 0;
}

}  // namespace

BroadcastAssignment construct_k0(const LobsterStructure& s) {
  if (s.k != 0) throw WrongLengthError("single-subtree construction called with spine length " + std::to_string(s.k));
  const SpineSubtree& st = s.subtrees[0];
  BroadcastAssignment f(s.tree->size());
  for (const Branch& br : st.branches) {
    if (br.two_leaf_count <= 2) {
      raise_small_branch(s, st, br, f, 3);
    } else {
      for (int leaf : branch_leaves(s, st, br)) f[leaf] = 1;
    }
  }
  // alpha2* == 0 means type Fa; its root can carry 1 on top of the 1-valued leaves.
  if (st.alpha2_star == 0) f[st.root] = 1;
  return f;
}

BroadcastAssignment step1(const LobsterStructure& s) {
  BroadcastAssignment f(s.tree->size());
  for (const SpineSubtree& st : s.subtrees) {
    for (const Branch& br : st.branches) {
      bool only_leaf = br.depth == 2 && br.two_leaf_count == 1;
      for (int leaf : branch_leaves(s, st, br)) f[leaf] = only_leaf ? 2 : 1;
    }
  }
  return f;
}

BroadcastAssignment step2(const LobsterStructure& s, const BroadcastAssignment& f1) {
  BroadcastAssignment f = f1;
  for (const SpineSubtree& st : s.subtrees) {
    if (st.depth_class != DepthClass::S2) continue;
    for (const Branch& br : st.branches) {
      if (br.two_leaf_count <= 2) raise_small_branch(s, st, br, f, 3);
    }
  }
  return f;
}

BroadcastAssignment step3(const LobsterStructure& s, const std::vector<SubtreeType>& types,
                          const BroadcastAssignment& f2) {
  BroadcastAssignment f = f2;
  for (int i = 0; i <= s.k; ++i) {
    if (types[i] != SubtreeType::Xc) continue;
    const SpineSubtree& st = s.subtrees[i];
    f[st.branches[0].attach_vertex] = 3;
    f[st.branches[1].attach_vertex] = 0;
  }
  return f;
}

BroadcastAssignment step4(const LobsterStructure& s, const std::vector<SubtreeType>& types,
                          const std::vector<T4Sequence>& sequences, const BroadcastAssignment& f3) {
  BroadcastAssignment f = f3;
  for (const T4Sequence& seq : sequences) {
    for (int i = seq.start; i <= seq.end; ++i) {
      const SpineSubtree& st = s.subtrees[i];
      if (seq.is_a_position(i)) {
        f[st.root] = 1;
      } else if (types[i] == SubtreeType::Xb) {
        // The unique small branch sorts first; its raised leaf drops to 2.
        f[chosen_leaf(s, st, st.branches[0])] = 2;
      } else if (types[i] == SubtreeType::Xc) {
        f[st.branches[0].attach_vertex] = 1;
        f[st.branches[1].attach_vertex] = 1;
      }
    }
  }
  return f;
}

ConstructionTrace construct(const LobsterStructure& s) {
  ConstructionTrace trace;
  if (s.k == 0) {
    trace.stages.push_back(construct_k0(s));
  } else {
    std::vector<SubtreeType> types = classify_all(s);
    std::vector<T4Sequence> sequences = find_t4_sequences(types);
    trace.stages.push_back(step1(s));
    trace.stages.push_back(step2(s, trace.stages[0]));
    trace.stages.push_back(step3(s, types, trace.stages[1]));
    trace.stages.push_back(step4(s, types, sequences, trace.stages[2]));
  }

  DistanceTable table = metrics(*s.tree);
  std::int64_t previous = 0;
  for (std::size_t i = 0; i < trace.stages.size(); ++i) {
    const std::string stage = "stage " + std::to_string(i + 1);
    if (!is_broadcast(*s.tree, table, trace.stages[i])) {
      throw VerificationError(stage + ": not a broadcast");
    }
    if (!is_independent(*s.tree, table, trace.stages[i])) {
      throw VerificationError(stage + ": not independent");
    }
    std::int64_t c = cost(trace.stages[i]);
    if (i > 0 && c < previous) throw VerificationError(stage + ": cost decreased");
    previous = c;
    trace.costs.push_back(c);
  }
  trace.final_cost = trace.costs.back();

  if (trace.final_cost != beta_star(s).beta_star) {
    throw VerificationError("final stage: cost " + std::to_string(trace.final_cost) +
                            " != formula value");
  }
  return trace;
}

int exceed_by(const LobsterStructure& s, int subtree_index, const BroadcastAssignment& f) {
  const SpineSubtree& st = s.subtrees[subtree_index];
  std::int64_t e = 0;
  for (const Branch& br : st.branches) {
    std::int64_t depth = br.depth;
    for (int leaf : branch_leaves(s, st, br)) e = std::max(e, f[leaf] - depth);
  }
  return static_cast<int>(e);
}

}  // namespace lobcast
