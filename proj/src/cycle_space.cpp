#include "plybasis/cycle_space.hpp"

#include <algorithm>
#include <string>

#include "plybasis/errors.hpp"
#include "plybasis/forest.hpp"

namespace plybasis {

void GeneratingSet::add(EdgeSet element, std::string tag) {
  if (element.universe_size() != edge_count_) {
    throw UsageError("element over " + std::to_string(element.universe_size()) + " edges added to a set over " +
                     std::to_string(edge_count_));
  }
  element.for_each([&](int e) { ++ply_[static_cast<std::size_t>(e)]; });
  elements_.push_back(std::move(element));
  tags_.push_back(std::move(tag));
}

void GeneratingSet::append(const GeneratingSet& other) {
  for (std::size_t i = 0; i < other.size(); ++i) add(other.elements_[i], other.tags_[i]);
}

int GeneratingSet::max_ply() const {
  return ply_.empty() ? 0 : *std::max_element(ply_.begin(), ply_.end());
}

GeneratingSet GeneratingSet::prefix(std::size_t count) const {
  GeneratingSet out(edge_count_);
  for (std::size_t i = 0; i < std::min(count, size()); ++i) out.add(elements_[i], tags_[i]);
  return out;
}

void Gf2Echelon::reduce(EdgeSet& v) const {
  int p = v.first();
  while (p != -1) {
    const int row = pivot_row_[static_cast<std::size_t>(p)];
    if (row == -1) return;
    v.xor_tail(rows_[static_cast<std::size_t>(row)], static_cast<std::size_t>(p) >> 6);
    p = v.next_from(static_cast<std::size_t>(p) + 1);
  }
}

bool Gf2Echelon::insert(EdgeSet v) {
  if (v.universe_size() != edge_count_) throw UsageError("vector length does not match the echelon form");
  reduce(v);
  const int p = v.first();
  if (p == -1) return false;
  pivot_row_[static_cast<std::size_t>(p)] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

bool Gf2Echelon::in_span(EdgeSet v) const {
  if (v.universe_size() != edge_count_) throw UsageError("vector length does not match the echelon form");
  reduce(v);
  return v.none();
}

std::size_t gf2_rank(std::span<const EdgeSet> vectors) {
  if (vectors.empty()) return 0;
  Gf2Echelon echelon(vectors.front().universe_size());
  for (const auto& v : vectors) echelon.insert(v);
  return echelon.rank();
}

PlyProfile ply_profile(const GeneratingSet& basis) {
  PlyProfile p;
  p.per_edge.assign(basis.edge_count(), 0);
  for (const auto& element : basis.elements()) {
    element.for_each([&](int e) { ++p.per_edge[static_cast<std::size_t>(e)]; });
  }
  if (!p.per_edge.empty()) p.max = *std::max_element(p.per_edge.begin(), p.per_edge.end());
  return p;
}

namespace {

void require_eulerian_elements(const Graph& g, const EdgeSet* within, const GeneratingSet& basis) {
  if (basis.edge_count() != static_cast<std::size_t>(g.edge_count())) {
    throw UsageError("generating set is over a different graph");
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!is_eulerian(g, basis[i])) {
      throw UsageError("element " + std::to_string(i) + " is not an Eulerian subgraph");
    }
    if (within != nullptr && !basis[i].is_subset_of(*within)) {
      throw UsageError("element " + std::to_string(i) + " leaves the subgraph");
    }
  }
}

}  // namespace

bool is_generating_set(const Graph& g, const GeneratingSet& basis) {
  require_eulerian_elements(g, nullptr, basis);
  return gf2_rank(basis.elements()) == static_cast<std::size_t>(cycle_rank(g));
}

bool is_generating_set(const Graph& g, const EdgeSet& edges, const GeneratingSet& basis) {
  require_eulerian_elements(g, &edges, basis);
  return gf2_rank(basis.elements()) == static_cast<std::size_t>(cycle_rank(g, edges));
}

GeneratingSet independent_subset(const GeneratingSet& basis) {
  GeneratingSet out(basis.edge_count());
  Gf2Echelon echelon(basis.edge_count());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (echelon.insert(basis[i])) out.add(basis[i], basis.tag(i));
  }
  return out;
}

GeneratingSet extract_basis(const Graph& g, const GeneratingSet& basis) {
  if (!is_generating_set(g, basis)) throw PreconditionError("extract_basis: input does not generate the cycle space");
  return independent_subset(basis);
}

GeneratingSet fundamental_basis(const Graph& g, const EdgeSet& edges, const Forest& f) {
  if (!f.edges().is_subset_of(edges)) throw UsageError("fundamental_basis: forest is not a subgraph");
  GeneratingSet out(static_cast<std::size_t>(g.edge_count()));
  EdgeSet chords = edges;
  chords.subtract(f.edges());
  chords.for_each([&](int e) {
    EdgeSet cycle = f.path(g.edge(e).u, g.edge(e).v);
    cycle.set(static_cast<std::size_t>(e));
    out.add(std::move(cycle), "fundamental");
  });
  return out;
}

GeneratingSet fundamental_basis(const Graph& g, const Forest& f) { return fundamental_basis(g, g.all_edges(), f); }

}  // namespace plybasis
