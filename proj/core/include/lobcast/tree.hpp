#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lobcast {

// Immutable undirected tree on dense vertex ids 0..n-1.
//
// Construction validates the invariants once (exactly n-1 edges, no loops or
// duplicates, connected) and normalizes the edge list to sorted (min,max)
// pairs so that equal trees serialize identically. Adjacency is kept in a
// flat CSR layout with neighbor lists sorted ascending.
class Tree {
 public:
  Tree(int n, std::vector<std::pair<int, int>> edges);

  int size() const { return n_; }
  int degree(int v) const { return offset_[v + 1] - offset_[v]; }
  std::span<const int> neighbors(int v) const {
    return {adj_.data() + offset_[v], adj_.data() + offset_[v + 1]};
  }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // Edge-list text format: first line "n", then n-1 lines "u v" (0-based).
  static Tree parse_edge_list(const std::string& text);
  std::string to_edge_list() const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> adj_;
  std::vector<int> offset_;
};

// Per-vertex broadcast values, indexed by vertex id; 0 means silent.
// Values are 64-bit so cost sums cannot overflow at any realistic size.
struct BroadcastAssignment {
  std::vector<std::int64_t> values;

  BroadcastAssignment() = default;
  explicit BroadcastAssignment(int n) : values(static_cast<std::size_t>(n), 0) {}

  std::int64_t& operator[](int v) { return values[static_cast<std::size_t>(v)]; }
  std::int64_t operator[](int v) const { return values[static_cast<std::size_t>(v)]; }
  int size() const { return static_cast<int>(values.size()); }
};

// All-pairs hop distances plus per-vertex eccentricities and the diameter.
// Materialized as a full n*n matrix; only built on instances small enough
// to verify exhaustively (the formula path never touches it).
struct DistanceTable {
  int n = 0;
  std::vector<int> dist;  // row-major, dist[u*n + v]
  std::vector<int> ecc;
  int diameter = 0;

  int at(int u, int v) const {
    return dist[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)];
  }
};

// Hop distance from source to every vertex, O(n).
std::vector<int> bfs_distances(const Tree& tree, int source);

// Full distance table via one BFS per vertex, O(n^2).
DistanceTable metrics(const Tree& tree);

// Sum of all f-values.
std::int64_t cost(const BroadcastAssignment& f);

// True iff f(v) <= ecc(v) for every vertex.
bool is_broadcast(const Tree& tree, const DistanceTable& table, const BroadcastAssignment& f);

// True iff every pair of distinct positive-valued vertices u,v satisfies
// dist(u,v) > max(f(u), f(v)).
bool is_independent(const Tree& tree, const DistanceTable& table, const BroadcastAssignment& f);

// True iff every vertex lies within distance f(u) of some u with f(u) > 0.
bool is_dominating(const Tree& tree, const DistanceTable& table, const BroadcastAssignment& f);

}  // namespace lobcast
