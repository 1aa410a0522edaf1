#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "lobcast/lobster.hpp"

namespace lobcast {

// Fixed, fully specified 64-bit generator (splitmix64) so the same seed
// reproduces the same instances on every platform. Bounded draws take the
// remainder; the slight bias is irrelevant for fuzzing.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish draw in [lo, hi].
  int range(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool coin() { return (next() & 1u) != 0; }

 private:
  std::uint64_t state_;
};

struct IntRange {
  int lo = 0;
  int hi = 0;
};

struct GenParams {
  std::uint64_t seed = 0;
  IntRange k_range{0, 4};
  IntRange branch_count_range{2, 4};  // also the S1 leaf-count range
  IntRange leaf_count_range{1, 4};    // 2-leaves per S2 branch
  int max_vertices = 22;
};

// Streams instances from one seeded generator state, so a run of n draws is
// reproducible as a whole.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(const GenParams& params);

  // Samples over the spec grammar with S2 forced at both ends, resampling
  // while the vertex budget is exceeded. Throws UnsatisfiableError when the
  // ranges cannot fit max_vertices.
  LobsterSpec next();

 private:
  GenParams params_;
  SplitMix64 rng_;
};

// Single draw with a fresh generator.
LobsterSpec random_instance(const GenParams& params);

// Instance of roughly target_vertices vertices: subtrees are drawn from the
// seeded generator until the budget is reached, so the spine length scales
// linearly with the target. Used by the scaling benchmark.
LobsterSpec random_spec_with_size(std::uint64_t seed, int target_vertices);

// Allowed building blocks for exhaustive enumeration.
struct Catalog {
  std::vector<int> s1_sizes;                   // ascending 1-leaf counts, each >= 2
  std::vector<std::vector<int>> s2_multisets;  // ascending count lists, ordered by (size, lex)

  // Every S1 size in [2, max_branches] and every S2 multiset of 2..max_branches
  // counts drawn from [1, max_leaves].
  static Catalog bounded(int max_branches, int max_leaves);
};

// Exhaustive, duplicate-free (up to reversal) enumeration of the valid
// specs within the bounds. Order: spine length ascending, then odometer
// order over per-position options (rightmost position fastest) with end
// positions restricted to S2 entries; a spec is emitted only if its census
// profile is lexicographically no larger than its reversal's.
void enumerate_small(int max_vertices, int k_max, const Catalog& catalog,
                     const std::function<void(const LobsterSpec&)>& emit);

std::vector<LobsterSpec> enumerate_small(int max_vertices, int k_max, const Catalog& catalog);

}  // namespace lobcast
