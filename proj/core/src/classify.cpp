#include "lobcast/classify.hpp"

#include <cassert>

#include "lobcast/errors.hpp"

namespace lobcast {

const char* to_string(SubtreeType t) {
  switch (t) {
    case SubtreeType::Fa: return "Fa";
    case SubtreeType::G: return "G";
    case SubtreeType::Xa: return "Xa";
    case SubtreeType::Xb: return "Xb";
    case SubtreeType::Xc: return "Xc";
    case SubtreeType::Yc: return "Yc";
  }
  return "?";
}

int exceed_class(SubtreeType t) {
  switch (t) {
    case SubtreeType::Fa:
    case SubtreeType::G:
    case SubtreeType::Xa: return 0;
    case SubtreeType::Xb:
    case SubtreeType::Yc: return 1;
    case SubtreeType::Xc: return 2;
  }
  return 0;
}

std::vector<SubtreeType> classify_all(const LobsterStructure& s) {
  std::vector<SubtreeType> types(s.subtrees.size());
  for (int i = 0; i <= s.k; ++i) {
    const SpineSubtree& st = s.subtrees[i];
    if (st.depth_class == DepthClass::S1) {
      if (st.lambda1 >= 3) {
        types[i] = SubtreeType::Xa;
      } else {
        // lambda1 == 2; an S1 subtree is never at a spine end, so both
        // neighbors exist.
        bool s1_neighbor = s.subtrees[i - 1].depth_class == DepthClass::S1 ||
                           s.subtrees[i + 1].depth_class == DepthClass::S1;
        types[i] = s1_neighbor ? SubtreeType::G : SubtreeType::Xc;
      }
    } else {
      if (st.alpha2_star == 0) {
        types[i] = SubtreeType::Fa;
      } else if (st.alpha2_star == 1) {
        types[i] = SubtreeType::Xb;
      } else {
        types[i] = SubtreeType::Yc;
      }
    }
  }
  // A G or Xa subtree never neighbors an Xc: Xc requires S2 on both sides.
  for (int i = 0; i < s.k; ++i) {
    bool gxa = types[i] == SubtreeType::G || types[i] == SubtreeType::Xa;
    bool gxa_next = types[i + 1] == SubtreeType::G || types[i + 1] == SubtreeType::Xa;
    assert(!(gxa && types[i + 1] == SubtreeType::Xc));
    assert(!(gxa_next && types[i] == SubtreeType::Xc));
  }
  return types;
}

namespace {

bool is_x_role(SubtreeType t) {
  return t == SubtreeType::Xa || t == SubtreeType::Xb || t == SubtreeType::Xc || t == SubtreeType::Fa;
}

bool is_bxc(SubtreeType t) { return t == SubtreeType::Xb || t == SubtreeType::Xc; }

}  // namespace

std::vector<T4Sequence> find_t4_sequences(const std::vector<SubtreeType>& types) {
  const int k = static_cast<int>(types.size()) - 1;
  std::vector<T4Sequence> sequences;
  std::vector<bool> consumed(types.size(), false);
  std::vector<bool> endpoint(types.size(), false);  // A positions of emitted runs

  for (int i = 0; i <= k; ++i) {
    if (types[i] != SubtreeType::Fa || consumed[i]) continue;

    int end = i;
    while (end + 2 <= k && is_x_role(types[end + 1]) && types[end + 2] == SubtreeType::Fa) end += 2;

    // Off-board context positions count as the empty subtree, which does
    // not exceed. An emitted endpoint immediately to the left already
    // broadcasts from its root, so it blocks this run even though its type
    // is in class 0.
    bool left_ok = (i == 0 || (exceed_class(types[i - 1]) == 0 && !endpoint[i - 1])) &&
                   (i <= 1 || types[i - 2] != SubtreeType::Xc);
    bool right_ok = (end == k || exceed_class(types[end + 1]) == 0) &&
                    (end >= k - 1 || types[end + 2] != SubtreeType::Xc);
    if (!left_ok || !right_ok) continue;

    T4Sequence seq;
    seq.start = i;
    seq.end = end;
    seq.p = (end - i) / 2;
    for (int x = i + 1; x < end; x += 2) {
      seq.x_roles.push_back(types[x]);
      if (is_bxc(types[x])) ++seq.bxc_count;
    }
    for (int j = i; j <= end; ++j) consumed[j] = true;
    for (int j = i; j <= end; j += 2) endpoint[j] = true;
    sequences.push_back(std::move(seq));
  }
  return sequences;
}

}  // namespace lobcast
