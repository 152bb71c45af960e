#pragma once

#include <span>
#include <vector>

#include "plybasis/edge_set.hpp"
#include "plybasis/graph.hpp"

namespace plybasis {

class GeneratingSet;

/// An acyclic edge subset of a host graph, with a vertex set and rooted
/// parent pointers for path queries.
///
/// The vertex set defaults to every host vertex. Builders that work on
/// prefixes of a decomposition pass an explicit membership mask so that
/// shared-vertex sets (V(F1) ∩ V(F2)) are meaningful. Every forest edge
/// must join two members.
///
/// Holds a non-owning pointer to the host graph; the graph must outlive it.
class Forest {
 public:
  Forest(const Graph& g, EdgeSet edges);
  Forest(const Graph& g, EdgeSet edges, std::vector<char> members);

  const Graph& graph() const noexcept { return *graph_; }
  const EdgeSet& edges() const noexcept { return edges_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.count()); }

  bool contains(int v) const { return members_[static_cast<std::size_t>(v)] != 0; }
  const std::vector<char>& membership() const noexcept { return members_; }
  std::vector<int> vertices() const;

  /// Component id of a member vertex (-1 for non-members).
  int component(int v) const { return component_[static_cast<std::size_t>(v)]; }
  bool connected(int v, int w) const;
  int degree(int v) const { return degree_[static_cast<std::size_t>(v)]; }

  int parent(int v) const { return parent_[static_cast<std::size_t>(v)]; }
  int parent_edge(int v) const { return parent_edge_[static_cast<std::size_t>(v)]; }
  int depth(int v) const { return depth_[static_cast<std::size_t>(v)]; }

  /// Members in depth-first preorder. Each component is rooted at its
  /// smallest vertex; children are visited in host edge-id order.
  const std::vector<int>& preorder() const noexcept { return preorder_; }

  /// Edge ids of the unique v-w path, ordered from v to w.
  /// Throws DisconnectedError if v and w lie in different components.
  std::vector<int> path_edges(int v, int w) const;
  EdgeSet path(int v, int w) const;

 private:
  void build();

  const Graph* graph_;
  EdgeSet edges_;
  std::vector<char> members_;
  std::vector<int> component_, parent_, parent_edge_, depth_, degree_;
  std::vector<int> preorder_;
};

/// Spanning forest of g, grown breadth-first from the smallest vertex of
/// each component, scanning edges in id order.
Forest spanning_forest(const Graph& g);
/// Spanning forest of the subgraph (members, h). Edges of h must join members.
Forest spanning_forest(const Graph& g, const EdgeSet& h, std::vector<char> members);

/// P_F(v, w) as an edge set; empty when v == w.
EdgeSet forest_path(const Forest& f, int v, int w);

/// The vertex-minimal subforest F⌈S⌉ keeping every pair of S-vertices in
/// the same component iff they were in F.
Forest steiner_subforest(const Forest& f, std::span<const int> terminals);

struct SkeletonEdge {
  int u;
  int v;
  std::vector<int> path;  // host edge ids from u to v
  EdgeSet expansion;      // the same path as an edge set
};

/// F⌈⌈S⌉⌉: the Steiner subforest with non-terminal degree-2 vertices
/// suppressed. Edges carry their expansion path in F.
struct Skeleton {
  std::vector<int> vertices;  // sorted host vertex ids
  std::vector<SkeletonEdge> edges;
  EdgeSet steiner_edges;      // E(F⌈S⌉)
};

Skeleton skeleton(const Forest& f, std::span<const int> terminals);

/// ply_F(v, w, B): the largest ply along P_F(v, w); 0 for the empty path.
int ply_along(const Forest& f, int v, int w, const GeneratingSet& basis);
/// Shorthand for a skeleton edge: the largest ply along its expansion.
int ply_along(const SkeletonEdge& e, const GeneratingSet& basis);

/// A labelled multigraph rendered as a simple graph.
///
/// Each labelled edge becomes one edge of `graph`, except that a repeated
/// endpoint pair is subdivided through a fresh midpoint vertex. `label[e]`
/// is the host expansion of simple edge e; the second half of a subdivided
/// edge carries the empty label so that XOR-lifting counts the expansion once.
struct LabelledGraph {
  Graph graph;
  std::vector<int> host_vertex;  // host id per compact vertex, -1 for midpoints
  std::vector<EdgeSet> label;
  std::size_t host_edge_count = 0;
};

/// Union of skeletons over the same host graph, vertices identified by host id.
LabelledGraph skeleton_union(std::span<const Skeleton* const> parts, std::size_t host_edge_count);

/// Replace each labelled edge of every element by its expansion, then split
/// the resulting Eulerian subgraphs into edge-disjoint cycles of the host.
/// Empty results (expansions that cancel) are dropped.
GeneratingSet lift_skeleton_cycles(const Graph& host, const LabelledGraph& labelled, const GeneratingSet& cycles);

}  // namespace plybasis
