#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "plybasis/edge_set.hpp"

namespace plybasis {

struct Edge {
  int u = 0;
  int v = 0;

  int other(int x) const noexcept { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  int neighbor;
  int edge;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Edge ids are assigned in construction order and never change; every
/// EdgeSet over this graph is indexed by them. Self-loops, parallel edges
/// and out-of-range endpoints are rejected with UsageError.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const noexcept { return vertex_count_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Id of edge uv, if present.
  std::optional<int> edge_id(int u, int v) const;

  /// Incident edges of v in edge-id order.
  std::span<const Incidence> incident(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }

  EdgeSet no_edges() const { return EdgeSet(edges_.size()); }
  EdgeSet all_edges() const;

  /// Edges with both endpoints in `vertices` (the edge set of G[X]).
  EdgeSet induced(std::span<const int> vertices) const;

  bool valid_vertex(int v) const noexcept { return v >= 0 && v < vertex_count_; }

 private:
  static std::uint64_t key(int u, int v) noexcept;

  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::unordered_map<std::uint64_t, int> index_;
};

/// Degree of every vertex within the subgraph h.
std::vector<int> degrees(const Graph& g, const EdgeSet& h);

bool is_eulerian(const Graph& g, const EdgeSet& h);

/// True iff h is a single simple cycle (connected, every touched vertex of degree 2).
bool is_cycle(const Graph& g, const EdgeSet& h);

/// Partition of an Eulerian subgraph into pairwise edge-disjoint simple cycles.
/// Throws PreconditionError if h has a vertex of odd degree.
std::vector<EdgeSet> veblen_decompose(const Graph& g, const EdgeSet& h);

/// Component label per vertex, labels 0.. in order of smallest member.
std::vector<int> components(const Graph& g);
/// Same, for the spanning subgraph (V(g), h).
std::vector<int> components(const Graph& g, const EdgeSet& h);

int component_count(const Graph& g);

/// |E| - |V| + #components.
int cycle_rank(const Graph& g);
/// Cycle rank of the subgraph formed by the edges of h (vertex set = endpoints).
int cycle_rank(const Graph& g, const EdgeSet& h);

/// Edges of h lying on at least one cycle of h (the non-bridges).
EdgeSet cycle_edges(const Graph& g, const EdgeSet& h);

/// Complete graph, cycle, path and grid helpers used throughout tests and tools.
Graph make_complete(int n);
Graph make_cycle(int n);
Graph make_path(int n);
Graph make_grid(int rows, int cols);

}  // namespace plybasis
