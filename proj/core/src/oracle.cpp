#include "lobcast/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "lobcast/errors.hpp"

namespace lobcast {

namespace {

// Depth-first search over supports in inclusion-first order: at each vertex
// the branch that includes it comes first. The first optimum found is kept,
// which fixes the witness deterministically: at the smallest vertex where
// two optimal supports differ, the one containing it wins. The bound prune
// only discards branches that cannot strictly beat the incumbent, so it
// changes neither the value nor the witness.
class SupportSearch {
 public:
  SupportSearch(const DistanceTable& table, bool use_pruning)
      : n_(table.n), table_(table), prune_(use_pruning), caps_(table.ecc.begin(), table.ecc.end()) {}

  void run() { descend(0); }

  std::int64_t best_cost() const { return best_cost_; }
  std::uint32_t best_mask() const { return best_mask_; }
  std::uint64_t explored() const { return explored_; }

  // Value of vertex v within the support given by mask.
  int value_in(std::uint32_t mask, int v) const {
    int cap = table_.ecc[v];
    for (int u = 0; u < n_; ++u) {
      if (u != v && (mask >> u & 1u)) cap = std::min(cap, table_.at(u, v) - 1);
    }
    return cap;
  }

 private:
  void descend(int v) {
    if (v == n_) {
      if (mask_ != 0 && sum_ > best_cost_) {
        best_cost_ = sum_;
        best_mask_ = mask_;
      }
      return;
    }
    if (prune_) {
      std::int64_t bound = sum_;
      for (int w = v; w < n_; ++w) {
        if (caps_[w] > 0 && !(mask_ >> w & 1u)) bound += caps_[w];
      }
      if (bound <= best_cost_) return;
    }

    // caps_[v] >= 1 iff v is non-adjacent to every member, and then every
    // member keeps a positive value too; supersets of an infeasible support
    // stay infeasible, so the include branch is skipped outright.
    if (caps_[v] >= 1) {
      ++explored_;
      const std::size_t mark = undo_.size();
      sum_ += caps_[v];
      mask_ |= 1u << v;
      for (int w = 0; w < n_; ++w) {
        if (w == v) continue;
        int nd = table_.at(v, w) - 1;
        if (nd < caps_[w]) {
          undo_.push_back({w, caps_[w]});
          // A member's cap is its counted value; shrink the sum with it.
          if (mask_ >> w & 1u) sum_ -= caps_[w] - nd;
          caps_[w] = nd;
        }
      }
      descend(v + 1);
      while (undo_.size() > mark) {
        auto [w, old] = undo_.back();
        undo_.pop_back();
        if (mask_ >> w & 1u) sum_ += old - caps_[w];
        caps_[w] = old;
      }
      mask_ &= ~(1u << v);
      sum_ -= caps_[v];
    }
    descend(v + 1);
  }

  int n_;
  const DistanceTable& table_;
  bool prune_;
  std::vector<int> caps_;  // per vertex: best value it could still take
  std::vector<std::pair<int, int>> undo_;
  std::uint32_t mask_ = 0;
  std::int64_t sum_ = 0;
  std::int64_t best_cost_ = 0;
  std::uint32_t best_mask_ = 0;
  std::uint64_t explored_ = 0;
};

}  // namespace

OracleResult exact_beta_b(const Tree& tree, bool use_pruning) {
  const int n = tree.size();
  if (n < 2) throw TooSmallError("exact search needs at least 2 vertices");
  if (n > kOracleMaxVertices) {
    throw TooLargeError("exact search capped at " + std::to_string(kOracleMaxVertices) +
                        " vertices, got " + std::to_string(n));
  }

  DistanceTable table = metrics(tree);
  SupportSearch search(table, use_pruning);
  search.run();

  OracleResult result;
  result.beta_b = search.best_cost();
  result.explored = search.explored();
  result.witness = BroadcastAssignment(n);
  std::uint32_t mask = search.best_mask();
  for (int v = 0; v < n; ++v) {
    if (mask >> v & 1u) result.witness[v] = search.value_in(mask, v);
  }
  return result;
}

std::int64_t lower_bound_antipodal(const Tree& tree) {
  const int n = tree.size();
  if (n < 2) return 0;
  DistanceTable table = metrics(tree);
  const int diam = table.diameter;

  int best = 0;
  for (int start = 0; start < n; ++start) {
    if (table.ecc[start] != diam) continue;
    std::vector<int> antipodal{start};
    for (int v = 0; v < n; ++v) {
      if (v == start) continue;
      bool fits = true;
      for (int a : antipodal) {
        if (table.at(a, v) != diam) {
          fits = false;
          break;
        }
      }
      if (fits) antipodal.push_back(v);
    }
    best = std::max(best, static_cast<int>(antipodal.size()));
  }
  return static_cast<std::int64_t>(best) * (diam - 1);
}

}  // namespace lobcast
