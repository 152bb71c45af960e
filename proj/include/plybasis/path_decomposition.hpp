#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plybasis/edge_set.hpp"
#include "plybasis/graph.hpp"

namespace plybasis {

/// Ordered bag sequence B_0..B_n. Bags are kept sorted and duplicate-free.
class PathDecomposition {
 public:
  PathDecomposition() = default;
  explicit PathDecomposition(std::vector<std::vector<int>> bags);

  const std::vector<std::vector<int>>& bags() const noexcept { return bags_; }
  const std::vector<int>& bag(std::size_t i) const { return bags_[i]; }
  std::size_t size() const noexcept { return bags_.size(); }

  /// max |B_i| - 1, clamped at 0 (an all-empty decomposition has width 0).
  int width() const noexcept { return width_; }

  /// |B_i| = min(i, t+1) and |B_i \ B_{i-1}| = 1 for all i >= 1, with t = width().
  bool is_normal() const noexcept { return normal_; }

  friend bool operator==(const PathDecomposition& a, const PathDecomposition& b) { return a.bags_ == b.bags_; }

 private:
  std::vector<std::vector<int>> bags_;
  int width_ = 0;
  bool normal_ = false;
};

struct Violation {
  enum class Kind { VertexOutOfRange, NotContiguous, EdgeNotCovered };
  Kind kind;
  int vertex = -1;  // offending vertex (range/contiguity)
  int edge = -1;    // uncovered edge id
  std::string message;
};

/// std::nullopt when both decomposition conditions hold; otherwise the
/// first violation found (vertices checked before edges, in id order).
std::optional<Violation> validate(const Graph& g, const PathDecomposition& d);

/// Normal decomposition of the same width. Vertices not covered by any
/// bag are introduced after the covered ones. Throws PreconditionError
/// when d is invalid for g.
PathDecomposition normalize(const Graph& g, const PathDecomposition& d);

struct PathwidthResult {
  int width;
  PathDecomposition decomposition;
  std::vector<int> order;  // a vertex ordering achieving the width
};

inline constexpr int kDefaultPathwidthCap = 18;

/// Exact pathwidth via the vertex separation number.
///
/// Up to 18 vertices a full subset DP is used. Larger graphs (up to `cap`,
/// at most 64) go through an iterative-deepening search over vertex
/// subsets whose boundary fits the candidate width; it is exact but its
/// running time depends on the structure. Throws SizeError above `cap`.
PathwidthResult exact_pathwidth(const Graph& g, int cap = kDefaultPathwidthCap);

/// The full subset DP, exposed separately for cross-checks. n <= 24.
int pathwidth_subset_dp(const Graph& g);

/// Decomposition built from a vertex ordering: bag i holds v_i and every
/// earlier vertex with a neighbour at position >= i.
PathDecomposition decomposition_from_order(const Graph& g, const std::vector<int>& order);

/// H_0 = G[B_0]; H_i = G[B_i] minus the edges of G[B_{i-1} ∩ B_i].
std::vector<EdgeSet> bag_graphs(const Graph& g, const PathDecomposition& d);

/// A_i = B_i ∩ B_{i+1} for i = 0..n-1.
std::vector<std::vector<int>> adhesions(const PathDecomposition& d);

/// Largest adhesion size (0 for fewer than two bags).
int max_adhesion(const PathDecomposition& d);

/// Index of the first bag containing each vertex (-1 if none).
std::vector<int> first_bag(int vertex_count, const PathDecomposition& d);

}  // namespace plybasis
