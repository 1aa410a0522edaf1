#include "lobcast/lobster.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

#include "lobcast/errors.hpp"

namespace lobcast {

namespace {

void sort_branches(std::vector<Branch>& branches) {
  std::sort(branches.begin(), branches.end(), [](const Branch& a, const Branch& b) {
    return std::tie(a.depth, a.two_leaf_count, a.attach_vertex) <
           std::tie(b.depth, b.two_leaf_count, b.attach_vertex);
  });
}

void fill_census(SpineSubtree& st) {
  st.b = static_cast<int>(st.branches.size());
  st.lambda1 = 0;
  st.lambda2 = 0;
  st.lambda2_star = 0;
  st.alpha2_star = 0;
  bool any1 = false, any2 = false;
  for (const Branch& br : st.branches) {
    if (br.depth == 1) {
      any1 = true;
      ++st.lambda1;
    } else {
      any2 = true;
      st.lambda2 += br.two_leaf_count;
      if (br.two_leaf_count == 1) ++st.lambda2_star;
      if (br.two_leaf_count <= 2) ++st.alpha2_star;
    }
  }
  if (any1 && any2) {
    st.depth_class = DepthClass::Mixed;
  } else if (any2) {
    st.depth_class = DepthClass::S2;
  } else {
    st.depth_class = DepthClass::S1;
  }
}

void fill_totals(LobsterStructure& s) {
  s.lambda1_total = 0;
  s.lambda2_total = 0;
  s.lambda2_star_total = 0;
  for (const SpineSubtree& st : s.subtrees) {
    s.lambda1_total += st.lambda1;
    s.lambda2_total += st.lambda2;
    s.lambda2_star_total += st.lambda2_star;
  }
}

std::vector<int> subtree_profile_row(const SpineSubtree& st) {
  std::vector<int> row;
  row.reserve(2 + 2 * st.branches.size());
  row.push_back(static_cast<int>(st.depth_class));
  row.push_back(st.b);
  for (const Branch& br : st.branches) {
    row.push_back(br.depth);
    row.push_back(br.two_leaf_count);
  }
  return row;
}

void reverse_in_place(LobsterStructure& s) {
  std::reverse(s.spine.begin(), s.spine.end());
  std::reverse(s.subtrees.begin(), s.subtrees.end());
  for (int i = 0; i <= s.k; ++i) s.subtrees[i].index = i;
}

}  // namespace

LobsterStructure recognize_lobster(Tree tree) {
  return recognize_lobster(std::make_shared<const Tree>(std::move(tree)));
}

LobsterStructure recognize_lobster(std::shared_ptr<const Tree> tree_ptr) {
  const Tree& tree = *tree_ptr;
  const int n = tree.size();
  if (n < 5) throw TooSmallError("no lobster of interest has fewer than 5 vertices, got " + std::to_string(n));

  // First strip: C = tree minus its leaves.
  std::vector<bool> in_c(n, false);
  int c_size = 0;
  for (int v = 0; v < n; ++v) {
    if (tree.degree(v) > 1) {
      in_c[v] = true;
      ++c_size;
    }
  }
  // At most two non-leaf vertices cannot host a spine: a lone vertex or a
  // single edge is not a caterpillar.
  if (c_size <= 2) {
    throw EmptySpineError("stripping leaves only " + std::to_string(c_size) +
                          " vertices, which is not a caterpillar");
  }

  // Second strip: the spine is C minus the vertices pendent within C.
  std::vector<int> c_degree(n, 0);
  for (int v = 0; v < n; ++v) {
    if (!in_c[v]) continue;
    for (int w : tree.neighbors(v)) {
      if (in_c[w]) ++c_degree[v];
    }
  }
  std::vector<bool> in_spine(n, false);
  for (int v = 0; v < n; ++v) {
    if (in_c[v] && c_degree[v] >= 2) in_spine[v] = true;
  }

  // The remainder must be a path. It is connected (C is a tree and only
  // leaves of C were removed), so checking degrees suffices.
  std::vector<int> spine_degree(n, 0);
  int spine_size = 0;
  for (int v = 0; v < n; ++v) {
    if (!in_spine[v]) continue;
    ++spine_size;
    for (int w : tree.neighbors(v)) {
      if (in_spine[w]) ++spine_degree[v];
    }
  }
  if (spine_size == 0) throw EmptySpineError("second-level stripping leaves nothing");
  for (int v = 0; v < n; ++v) {
    if (in_spine[v] && spine_degree[v] > 2) {
      throw NotALobsterError("second-level stripping leaves a non-path (vertex " + std::to_string(v) +
                             " keeps degree " + std::to_string(spine_degree[v]) + ")");
    }
  }

  // Walk the path from one endpoint.
  LobsterStructure s;
  s.tree = std::move(tree_ptr);
  int start = -1;
  for (int v = 0; v < n && start < 0; ++v) {
    if (in_spine[v] && spine_degree[v] <= 1) start = v;
  }
  assert(start >= 0);
  s.spine.reserve(spine_size);
  int prev = -1, cur = start;
  while (cur >= 0) {
    s.spine.push_back(cur);
    int next = -1;
    for (int w : tree.neighbors(cur)) {
      if (in_spine[w] && w != prev) {
        next = w;
        break;
      }
    }
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(s.spine.size()) != spine_size) {
    throw NotALobsterError("second-level stripping leaves a disconnected remainder");
  }
  s.k = spine_size - 1;

  // Partition the rest into branches.
  int covered = spine_size;
  s.subtrees.resize(spine_size);
  for (int i = 0; i < spine_size; ++i) {
    SpineSubtree& st = s.subtrees[i];
    st.index = i;
    st.root = s.spine[i];
    for (int w : tree.neighbors(st.root)) {
      if (in_spine[w]) continue;
      Branch br;
      br.attach_vertex = w;
      if (tree.degree(w) == 1) {
        br.depth = 1;
        br.two_leaf_count = 0;
        covered += 1;
      } else {
        br.depth = 2;
        br.two_leaf_count = tree.degree(w) - 1;
        covered += 1 + br.two_leaf_count;
        for (int x : tree.neighbors(w)) {
          assert(x == st.root || tree.degree(x) == 1);
        }
      }
      st.branches.push_back(br);
    }
    sort_branches(st.branches);
    fill_census(st);
  }
  assert(covered == n);
  (void)covered;
  fill_totals(s);

  // Reversal symmetry: keep the orientation whose census rows compare smaller.
  std::vector<std::vector<int>> forward = census_profile(s);
  std::vector<std::vector<int>> backward(forward.rbegin(), forward.rend());
  if (backward < forward) reverse_in_place(s);

  return s;
}

ValidationResult validate_locally_uniform(const LobsterStructure& s) {
  ValidationResult result;
  for (const SpineSubtree& st : s.subtrees) {
    if (st.depth_class == DepthClass::Mixed) {
      result.ok = false;
      result.violations.push_back(st.index);
    }
  }
  return result;
}

ValidationResult validate_two_lobster(const LobsterStructure& s) {
  ValidationResult result;
  for (const SpineSubtree& st : s.subtrees) {
    if (st.b < 2) {
      result.ok = false;
      result.violations.push_back(st.index);
    }
  }
  return result;
}

void validate_spec(const LobsterSpec& spec) {
  if (spec.subtrees.empty()) throw SpecViolationError("subtrees: must not be empty");
  const int last = static_cast<int>(spec.subtrees.size()) - 1;
  for (int i = 0; i <= last; ++i) {
    const SubtreeSpec& st = spec.subtrees[i];
    const std::string path = "subtrees[" + std::to_string(i) + "]";
    if (st.kind == DepthClass::Mixed) throw SpecViolationError(path + ".type: must be S1 or S2");
    if ((i == 0 || i == last) && st.kind != DepthClass::S2) {
      throw SpecViolationError(path + ".type: end subtree must be S2");
    }
    if (st.kind == DepthClass::S1) {
      if (!st.branches.empty()) throw SpecViolationError(path + ".branches: S1 subtree takes a leaf count");
      if (st.leaves < 2) throw SpecViolationError(path + ".leaves: need at least 2, got " + std::to_string(st.leaves));
    } else {
      if (st.leaves != 0) throw SpecViolationError(path + ".leaves: S2 subtree takes a branch list");
      if (static_cast<int>(st.branches.size()) < 2) {
        throw SpecViolationError(path + ".branches: need at least 2 branches, got " +
                                 std::to_string(st.branches.size()));
      }
      for (std::size_t j = 0; j < st.branches.size(); ++j) {
        if (st.branches[j] < 1) {
          throw SpecViolationError(path + ".branches[" + std::to_string(j) + "]: need at least 1 leaf");
        }
      }
    }
  }
}

int spec_vertex_count(const LobsterSpec& spec) {
  int n = static_cast<int>(spec.subtrees.size());
  for (const SubtreeSpec& st : spec.subtrees) {
    if (st.kind == DepthClass::S1) {
      n += st.leaves;
    } else {
      n += static_cast<int>(st.branches.size());
      for (int c : st.branches) n += c;
    }
  }
  return n;
}

LobsterStructure build_tree_from_spec(const LobsterSpec& spec) {
  validate_spec(spec);

  const int k = static_cast<int>(spec.subtrees.size()) - 1;
  const int n = spec_vertex_count(spec);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  for (int i = 0; i < k; ++i) edges.emplace_back(i, i + 1);

  LobsterStructure s;
  s.k = k;
  s.spine.resize(k + 1);
  std::iota(s.spine.begin(), s.spine.end(), 0);
  s.subtrees.resize(k + 1);

  int next_id = k + 1;
  for (int i = 0; i <= k; ++i) {
    const SubtreeSpec& in = spec.subtrees[i];
    SpineSubtree& st = s.subtrees[i];
    st.index = i;
    st.root = i;
    if (in.kind == DepthClass::S1) {
      for (int j = 0; j < in.leaves; ++j) {
        int leaf = next_id++;
        edges.emplace_back(i, leaf);
        st.branches.push_back(Branch{leaf, 1, 0});
      }
    } else {
      for (int c : in.branches) {
        int middle = next_id++;
        edges.emplace_back(i, middle);
        for (int j = 0; j < c; ++j) edges.emplace_back(middle, next_id++);
        st.branches.push_back(Branch{middle, 2, c});
      }
    }
    sort_branches(st.branches);
    fill_census(st);
  }
  assert(next_id == n);
  fill_totals(s);
  s.tree = std::make_shared<const Tree>(n, std::move(edges));
  return s;
}

LobsterSpec spec_from_structure(const LobsterStructure& s) {
  LobsterSpec spec;
  spec.subtrees.reserve(s.subtrees.size());
  for (const SpineSubtree& st : s.subtrees) {
    SubtreeSpec out;
    if (st.depth_class == DepthClass::S1) {
      out.kind = DepthClass::S1;
      out.leaves = st.lambda1;
    } else {
      out.kind = DepthClass::S2;
      for (const Branch& br : st.branches) out.branches.push_back(br.two_leaf_count);
    }
    spec.subtrees.push_back(std::move(out));
  }
  return spec;
}

LobsterSpec reversed(const LobsterSpec& spec) {
  LobsterSpec out;
  out.subtrees.assign(spec.subtrees.rbegin(), spec.subtrees.rend());
  return out;
}

std::vector<std::vector<int>> census_profile(const LobsterStructure& s) {
  std::vector<std::vector<int>> profile;
  profile.reserve(s.subtrees.size());
  for (const SpineSubtree& st : s.subtrees) profile.push_back(subtree_profile_row(st));
  return profile;
}

std::vector<std::vector<int>> census_profile(const LobsterSpec& spec) {
  std::vector<std::vector<int>> profile;
  profile.reserve(spec.subtrees.size());
  for (const SubtreeSpec& st : spec.subtrees) {
    std::vector<int> row;
    if (st.kind == DepthClass::S1) {
      row.push_back(static_cast<int>(DepthClass::S1));
      row.push_back(st.leaves);
      for (int j = 0; j < st.leaves; ++j) {
        row.push_back(1);
        row.push_back(0);
      }
    } else {
      std::vector<int> counts = st.branches;
      std::sort(counts.begin(), counts.end());
      row.push_back(static_cast<int>(DepthClass::S2));
      row.push_back(static_cast<int>(counts.size()));
      for (int c : counts) {
        row.push_back(2);
        row.push_back(c);
      }
    }
    profile.push_back(std::move(row));
  }
  return profile;
}

std::vector<int> branch_leaves(const LobsterStructure& s, const SpineSubtree& st, const Branch& br) {
  if (br.depth == 1) return {br.attach_vertex};
  std::vector<int> leaves;
  leaves.reserve(br.two_leaf_count);
  for (int x : s.tree->neighbors(br.attach_vertex)) {
    if (x != st.root) leaves.push_back(x);
  }
  return leaves;
}

}  // namespace lobcast
