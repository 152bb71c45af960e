#pragma once

// Slow reference implementations used only by tests.

#include <algorithm>
#include <numeric>
#include <unordered_set>
#include <vector>

#include "plybasis/cycle_space.hpp"
#include "plybasis/graph.hpp"

namespace plybasis::testing {

/// Every Eulerian subgraph of g (found by trying all 2^m edge subsets) is a
/// XOR of some subset of B. Only for small m.
inline bool definitional_generating(const Graph& g, const GeneratingSet& basis) {
  const auto m = static_cast<std::size_t>(g.edge_count());
  std::unordered_set<EdgeSet, EdgeSetHash> span{EdgeSet(m)};
  for (const EdgeSet& b : basis.elements()) {
    std::vector<EdgeSet> grown;
    for (const EdgeSet& x : span) grown.push_back(symmetric_difference(x, b));
    span.insert(grown.begin(), grown.end());
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    EdgeSet h(m);
    for (std::size_t e = 0; e < m; ++e)
      if ((mask >> e) & 1U) h.set(e);
    if (is_eulerian(g, h) && !span.count(h)) return false;
  }
  return true;
}

/// Vertex separation number minimized over all vertex orders.
inline int pathwidth_by_permutations(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  int best = n;
  do {
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    int worst = 0;
    for (int i = 0; i < n; ++i) {
      // vertices at positions <= i with a neighbour after i
      int cut = 0;
      for (int v = 0; v < n; ++v) {
        if (pos[static_cast<std::size_t>(v)] > i) continue;
        for (const auto& inc : g.incident(v))
          if (pos[static_cast<std::size_t>(inc.neighbor)] > i) {
            ++cut;
            break;
          }
      }
      worst = std::max(worst, cut);
    }
    best = std::min(best, worst);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

inline Graph graph_from(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> list;
  for (auto [u, v] : edges) list.push_back({u, v});
  return Graph(n, std::move(list));
}

inline EdgeSet edges_of(const Graph& g, std::initializer_list<std::pair<int, int>> pairs) {
  EdgeSet out(static_cast<std::size_t>(g.edge_count()));
  for (auto [u, v] : pairs) out.set(static_cast<std::size_t>(*g.edge_id(u, v)));
  return out;
}

}  // namespace plybasis::testing
