#include "lobcast/beta_star.hpp"

#include <numeric>

#include "lobcast/errors.hpp"

namespace lobcast {

NuValues compute_nus(const LobsterStructure& s, const std::vector<SubtreeType>& types,
                     const std::vector<T4Sequence>& sequences) {
  NuValues nu;
  nu.nu1 = s.lambda1_total + s.lambda2_total + s.lambda2_star_total;
  for (const SpineSubtree& st : s.subtrees) nu.nu2 += st.alpha2_star;
  for (SubtreeType t : types) {
    if (t == SubtreeType::Xc) ++nu.nu3;
  }
  for (const T4Sequence& seq : sequences) nu.nu4 += seq.value();
  return nu;
}

std::vector<std::int64_t> per_subtree_values(const LobsterStructure& s,
                                             const std::vector<SubtreeType>& types,
                                             const std::vector<T4Sequence>& sequences) {
  std::vector<int> role(s.subtrees.size(), 0);  // 0 outside, 1 at an A position, 2 at an X position
  for (const T4Sequence& seq : sequences) {
    for (int i = seq.start; i <= seq.end; ++i) role[i] = seq.is_a_position(i) ? 1 : 2;
  }

  std::vector<std::int64_t> values(s.subtrees.size(), 0);
  for (int i = 0; i <= s.k; ++i) {
    const SpineSubtree& st = s.subtrees[i];
    switch (types[i]) {
      case SubtreeType::G:
      case SubtreeType::Xa:
        values[i] = st.lambda1;
        break;
      case SubtreeType::Xb:
        values[i] = static_cast<std::int64_t>(st.lambda2) + st.lambda2_star + st.alpha2_star -
                    (role[i] == 2 ? 1 : 0);
        break;
      case SubtreeType::Xc:
        values[i] = role[i] == 2 ? 2 : 3;
        break;
      case SubtreeType::Yc:
        values[i] = static_cast<std::int64_t>(st.lambda2) + st.lambda2_star + st.alpha2_star;
        break;
      case SubtreeType::Fa:
        values[i] = static_cast<std::int64_t>(st.lambda2) + (role[i] == 1 ? 1 : 0);
        break;
    }
  }
  return values;
}

BetaStarReport beta_star(const LobsterStructure& s) {
  BetaStarReport report;
  report.types = classify_all(s);
  report.sequences = find_t4_sequences(report.types);

  NuValues nu = compute_nus(s, report.types, report.sequences);
  report.nu1 = nu.nu1;
  report.nu2 = nu.nu2;
  report.nu3 = nu.nu3;
  report.nu4 = nu.nu4;
  report.beta_star = nu.total();
  report.per_subtree = per_subtree_values(s, report.types, report.sequences);

  std::int64_t by_subtree =
      std::accumulate(report.per_subtree.begin(), report.per_subtree.end(), std::int64_t{0});
  if (by_subtree != report.beta_star) {
    throw DecompositionMismatchError("nu sum " + std::to_string(report.beta_star) +
                                     " != per-subtree sum " + std::to_string(by_subtree));
  }
  return report;
}

}  // namespace lobcast
