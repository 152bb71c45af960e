#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "plybasis/cycle_space.hpp"
#include "plybasis/forest.hpp"
#include "plybasis/graph.hpp"
#include "plybasis/path_decomposition.hpp"

namespace plybasis {

struct RemovedEdge {
  int edge;
  int key;  // ply at removal (pw4t) or birth time (adhesion)
};

/// One induction step of a decomposition-driven builder.
struct TraceStep {
  int bag = 0;                  // decomposition index i
  int vertex = -1;              // introduced vertex (pw4t only)
  std::size_t lambda_begin = 0; // basis[lambda_begin, delta_begin) is Λ of this step
  std::size_t delta_begin = 0;  // basis[delta_begin, end) is Δ of this step
  std::size_t end = 0;          // basis size after the step
  int delta_ply = 0;
  EdgeSet forest_plus;          // F^+ before edge removal
  std::vector<RemovedEdge> removed;
  EdgeSet forest;               // F after the step
};

struct BuildTrace {
  std::vector<TraceStep> steps;
  std::vector<int> birth_time;  // per edge, index of the bag graph H_i holding it
  int d_max = 0;                // largest Δ-ply over all steps
};

struct BuildResult {
  GeneratingSet basis;
  EdgeSet forest;  // spanning forest of g
  BuildTrace trace;
};

/// Ply-2 cycle basis Δ of F^+ = f_minus ∪ {v w : w ∈ neighbors}.
///
/// Within each tree of f_minus the neighbours are ordered by DFS preorder
/// and consecutive ones are joined through v. Every tree edge lies on at
/// most two consecutive tree paths, and every apex edge on at most two cycles.
/// v must have no forest edges; every vw must be an edge of the host graph.
GeneratingSet apex_forest_basis(const Forest& f_minus, int v, std::span<const int> neighbors);

/// B^- ∪ Δ for the graph g_minus + v. Throws PreconditionError if B^- does
/// not generate the cycle space of `g_minus_edges`.
GeneratingSet incremental_step(const EdgeSet& g_minus_edges, const Forest& f_minus, const GeneratingSet& b_minus, int v,
                               std::span<const int> neighbors);

/// Ply <= 4t generating set from a normal path decomposition of width t.
///
/// Vertices are added in bag order; each step appends the apex basis of
/// F^- plus the new star, then deletes cycle edges of largest ply (lowest
/// id on ties) until the forest is acyclic again.
BuildResult build_pw4t(const Graph& g, const PathDecomposition& d);

struct SubgraphBundle {
  EdgeSet edges;  // H_i as a subgraph of the host
  const Forest* forest;
  const GeneratingSet* basis;
};

/// B_1 ∪ B_2 ∪ Δ. Throws PreconditionError unless Δ is a basis of the cycle
/// space of F_1 ∪ F_2; throws std::logic_error if the result fails to
/// generate H_1 ∪ H_2 (that would contradict the merging argument).
GeneratingSet merge_bases(const Graph& g, const SubgraphBundle& first, const SubgraphBundle& second,
                          const GeneratingSet& delta);

struct TwoTreesResult {
  GeneratingSet delta;
  int ply = 0;         // achieved ply of Δ
  int shared = 0;      // |V(T1) ∩ V(T2)|
  int skeleton_vertices = 0;
};

/// Cycle basis of T1 ∪ T2 through the skeletons on the shared vertices:
/// both forests are reduced to F⌈⌈A⌉⌉, a generating set of the small union
/// is built with the shortest-cycle heuristic, lifted back, and thinned to
/// a basis.
TwoTreesResult two_trees_basis(const Forest& t1, const Forest& t2, std::uint64_t seed = 0x5eed);

enum class MaxPlyMode { Deterministic, Randomized };

/// Repeatedly take a shortest cycle of the residual graph and delete a
/// uniformly random edge of it until the residual is a forest.
GeneratingSet fh_generating_set(const Graph& g, std::uint64_t seed);

/// As fh_generating_set, but the deleted edge has the largest current ply
/// (lowest id on ties), or is drawn with probability proportional to ply.
GeneratingSet maxply_generating_set(const Graph& g, MaxPlyMode mode, std::uint64_t seed = 0);

/// Supplies a generating set of 𝒞(H_i) for the subgraph `edges` of g.
using BagBasisProvider = std::function<GeneratingSet(const Graph& g, const EdgeSet& edges)>;

/// Generating set for a path decomposition with small adhesions.
///
/// k <= 1: the union of the providers' bases. Otherwise an inductive build
/// over the bags: Λ from the provider, Δ from two_trees_basis(F^-, F_i) with
/// F_i a spanning forest of H_i, then deletion of cycle edges with the
/// smallest birth time. Throws PreconditionError if an adhesion exceeds k,
/// or if a provider basis fails to generate its H_i or exceeds ply b.
BuildResult build_adhesion(const Graph& g, const PathDecomposition& d, int k, int b,
                           const BagBasisProvider& provider);

/// Edges of a shortest cycle of the subgraph `edges`, or empty if acyclic.
/// `at_least` is a known lower bound on the girth (it only speeds the search).
EdgeSet shortest_cycle(const Graph& g, const EdgeSet& edges, int at_least = 3);

}  // namespace plybasis
