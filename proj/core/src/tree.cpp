#include "lobcast/tree.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "lobcast/errors.hpp"

namespace lobcast {

Tree::Tree(int n, std::vector<std::pair<int, int>> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw TreeStructureError("tree needs at least one vertex");
  if (static_cast<int>(edges_.size()) != n_ - 1) {
    throw TreeStructureError("tree on " + std::to_string(n_) + " vertices needs exactly " +
                             std::to_string(n_ - 1) + " edges, got " + std::to_string(edges_.size()));
  }
  for (auto& [u, v] : edges_) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw TreeStructureError("edge endpoint out of range");
    if (u == v) throw TreeStructureError("self-loop on vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw TreeStructureError("duplicate edge");
  }

  std::vector<int> deg(n_, 0);
  for (const auto& [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  offset_.assign(n_ + 1, 0);
  for (int v = 0; v < n_; ++v) offset_[v + 1] = offset_[v] + deg[v];
  adj_.resize(2 * static_cast<std::size_t>(n_ - 1));
  std::vector<int> cursor(offset_.begin(), offset_.end() - 1);
  for (const auto& [u, v] : edges_) {
    adj_[cursor[u]++] = v;
    adj_[cursor[v]++] = u;
  }
  for (int v = 0; v < n_; ++v) {
    std::sort(adj_.begin() + offset_[v], adj_.begin() + offset_[v + 1]);
  }

  // n-1 edges plus full reachability from 0 rules out cycles.
  std::vector<int> reach = bfs_distances(*this, 0);
  if (std::find(reach.begin(), reach.end(), -1) != reach.end()) {
    throw TreeStructureError("edge set is not connected");
  }
}

Tree Tree::parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  if (!(in >> n)) throw TreeStructureError("edge list: missing vertex count");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n > 0 ? n - 1 : 0);
  int u, v;
  while (in >> u >> v) edges.emplace_back(u, v);
  return Tree(n, std::move(edges));
}

std::string Tree::to_edge_list() const {
  std::ostringstream out;
  out << n_ << '\n';
  for (const auto& [u, v] : edges_) out << u << ' ' << v << '\n';
  return out.str();
}

std::vector<int> bfs_distances(const Tree& tree, int source) {
  std::vector<int> dist(tree.size(), -1);
  std::vector<int> queue;
  queue.reserve(tree.size());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int w : tree.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceTable metrics(const Tree& tree) {
  const int n = tree.size();
  DistanceTable table;
  table.n = n;
  table.dist.resize(static_cast<std::size_t>(n) * n);
  table.ecc.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    std::vector<int> row = bfs_distances(tree, v);
    int ecc = 0;
    for (int d : row) ecc = std::max(ecc, d);
    table.ecc[v] = ecc;
    table.diameter = std::max(table.diameter, ecc);
    std::copy(row.begin(), row.end(), table.dist.begin() + static_cast<std::size_t>(v) * n);
  }
  return table;
}

std::int64_t cost(const BroadcastAssignment& f) {
  std::int64_t total = 0;
  for (std::int64_t value : f.values) total += value;
  return total;
}

bool is_broadcast(const Tree& tree, const DistanceTable& table, const BroadcastAssignment& f) {
  for (int v = 0; v < tree.size(); ++v) {
    if (f[v] < 0 || f[v] > table.ecc[v]) return false;
  }
  return true;
}

bool is_independent(const Tree& tree, const DistanceTable& table, const BroadcastAssignment& f) {
  std::vector<int> active;
  for (int v = 0; v < tree.size(); ++v) {
    if (f[v] > 0) active.push_back(v);
  }
  for (std::size_t i = 0; i < active.size(); ++i) {
    for (std::size_t j = i + 1; j < active.size(); ++j) {
      int u = active[i], v = active[j];
      if (table.at(u, v) <= std::max(f[u], f[v])) return false;
    }
  }
  return true;
}

bool is_dominating(const Tree& tree, const DistanceTable& table, const BroadcastAssignment& f) {
  std::vector<int> active;
  for (int v = 0; v < tree.size(); ++v) {
    if (f[v] > 0) active.push_back(v);
  }
  for (int v = 0; v < tree.size(); ++v) {
    bool covered = false;
    for (int u : active) {
      if (table.at(u, v) <= f[u]) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace lobcast
