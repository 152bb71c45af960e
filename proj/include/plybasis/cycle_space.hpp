#pragma once

#include <span>
#include <string>
#include <vector>

#include "plybasis/edge_set.hpp"
#include "plybasis/graph.hpp"

namespace plybasis {

class Forest;

/// Ordered collection of Eulerian subgraphs with a maintained ply profile.
///
/// Elements are not checked for Eulerian-ness on insertion (that needs the
/// host graph); is_generating_set and the verification module do it.
/// Duplicates are allowed.
class GeneratingSet {
 public:
  GeneratingSet() = default;
  explicit GeneratingSet(std::size_t edge_count) : edge_count_(edge_count), ply_(edge_count, 0) {}

  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }

  void add(EdgeSet element, std::string tag = {});
  void append(const GeneratingSet& other);

  const EdgeSet& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<EdgeSet>& elements() const noexcept { return elements_; }
  const std::string& tag(std::size_t i) const { return tags_[i]; }
  const std::vector<std::string>& tags() const noexcept { return tags_; }

  /// Incrementally maintained ply(e, B).
  int ply(int e) const { return ply_[static_cast<std::size_t>(e)]; }
  const std::vector<int>& ply_counts() const noexcept { return ply_; }
  int max_ply() const;

  /// The first `count` elements, with their tags.
  GeneratingSet prefix(std::size_t count) const;

 private:
  std::size_t edge_count_ = 0;
  std::vector<EdgeSet> elements_;
  std::vector<std::string> tags_;
  std::vector<int> ply_;
};

/// Incremental GF(2) row echelon form keyed by each row's lowest set edge.
class Gf2Echelon {
 public:
  explicit Gf2Echelon(std::size_t edge_count) : edge_count_(edge_count), pivot_row_(edge_count, -1) {}

  /// Adds v; returns true iff v was independent of the rows so far.
  bool insert(EdgeSet v);
  bool in_span(EdgeSet v) const;
  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  void reduce(EdgeSet& v) const;

  std::size_t edge_count_;
  std::vector<EdgeSet> rows_;
  std::vector<int> pivot_row_;
};

std::size_t gf2_rank(std::span<const EdgeSet> vectors);

struct PlyProfile {
  std::vector<int> per_edge;
  int max = 0;
};

/// Ply counts recomputed from the elements, ignoring the cached profile.
PlyProfile ply_profile(const GeneratingSet& basis);

/// rank(B) == cycle_rank(g). Throws UsageError if an element is not an
/// Eulerian subgraph of g.
bool is_generating_set(const Graph& g, const GeneratingSet& basis);

/// Same test restricted to the subgraph formed by `edges`: every element
/// must be an Eulerian subgraph of it and the rank must equal its cycle rank.
bool is_generating_set(const Graph& g, const EdgeSet& edges, const GeneratingSet& basis);

/// Earliest independent elements in list order. Throws PreconditionError
/// when `basis` does not generate the cycle space of g.
GeneratingSet extract_basis(const Graph& g, const GeneratingSet& basis);

/// Same selection without the generating precondition: a basis of span(B).
GeneratingSet independent_subset(const GeneratingSet& basis);

/// One cycle per non-forest edge, in edge-id order.
GeneratingSet fundamental_basis(const Graph& g, const Forest& f);
/// Fundamental cycles of the subgraph `edges` relative to its spanning forest f.
GeneratingSet fundamental_basis(const Graph& g, const EdgeSet& edges, const Forest& f);

}  // namespace plybasis
