#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plybasis/builders.hpp"

namespace plybasis {

/// The subgraph formed by an edge set, relabelled densely. Vertices are the
/// endpoints of the chosen edges in increasing host order.
struct Subgraph {
  Graph graph;
  std::vector<int> host_vertex;
  std::vector<int> host_edge;
};

Subgraph extract_subgraph(const Graph& g, const EdgeSet& edges);

/// Maps a generating set of `sub.graph` back to host edge ids.
GeneratingSet lift_to_host(const Subgraph& sub, const GeneratingSet& local, std::size_t host_edge_count);

/// Bag-basis sources by name:
///   fundamental  fundamental cycles of a BFS forest
///   fh           shortest-cycle loop with random deletion (seeded)
///   maxply       shortest-cycle loop with deterministic max-ply deletion
///   best         lowest-ply result among the three above
///   exact        brute-force minimum ply when the cycle rank is <= 5, else best
/// Throws UsageError for unknown names.
BagBasisProvider make_provider(const std::string& name, std::uint64_t seed = 0);

/// Names accepted by make_provider.
const std::vector<std::string>& provider_names();

}  // namespace plybasis
