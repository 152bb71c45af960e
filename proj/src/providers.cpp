#include "plybasis/providers.hpp"

#include "plybasis/errors.hpp"
#include "plybasis/verification.hpp"

namespace plybasis {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

GeneratingSet best_of(const Graph& g, std::uint64_t seed) {
  GeneratingSet best = maxply_generating_set(g, MaxPlyMode::Deterministic);
  for (GeneratingSet other : {fh_generating_set(g, seed), fundamental_basis(g, spanning_forest(g))}) {
    if (other.max_ply() < best.max_ply()) best = std::move(other);
  }
  return best;
}

}  // namespace

Subgraph extract_subgraph(const Graph& g, const EdgeSet& edges) {
  std::vector<int> local(idx(g.vertex_count()), -1);
  std::vector<int> host_vertex;
  std::vector<int> host_edge;
  edges.for_each([&](int e) {
    for (int v : {g.edge(e).u, g.edge(e).v})
      if (local[idx(v)] == -1) local[idx(v)] = 0;
    host_edge.push_back(e);
  });
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (local[idx(v)] == -1) continue;
    local[idx(v)] = static_cast<int>(host_vertex.size());
    host_vertex.push_back(v);
  }
  std::vector<Edge> list;
  list.reserve(host_edge.size());
  for (int e : host_edge) list.push_back({local[idx(g.edge(e).u)], local[idx(g.edge(e).v)]});
  return {Graph(static_cast<int>(host_vertex.size()), std::move(list)), std::move(host_vertex), std::move(host_edge)};
}

GeneratingSet lift_to_host(const Subgraph& sub, const GeneratingSet& local, std::size_t host_edge_count) {
  GeneratingSet out(host_edge_count);
  for (std::size_t i = 0; i < local.size(); ++i) {
    EdgeSet x(host_edge_count);
    local[i].for_each([&](int e) { x.set(idx(sub.host_edge[idx(e)])); });
    out.add(std::move(x), local.tag(i));
  }
  return out;
}

const std::vector<std::string>& provider_names() {
  static const std::vector<std::string> names{"exact", "best", "maxply", "fh", "fundamental"};
  return names;
}

BagBasisProvider make_provider(const std::string& name, std::uint64_t seed) {
  std::function<GeneratingSet(const Graph&)> local;
  if (name == "fundamental") {
    local = [](const Graph& h) { return fundamental_basis(h, spanning_forest(h)); };
  } else if (name == "fh") {
    local = [seed](const Graph& h) { return fh_generating_set(h, seed); };
  } else if (name == "maxply") {
    local = [](const Graph& h) { return maxply_generating_set(h, MaxPlyMode::Deterministic); };
  } else if (name == "best") {
    local = [seed](const Graph& h) { return best_of(h, seed); };
  } else if (name == "exact") {
    local = [seed](const Graph& h) {
      if (cycle_rank(h) <= kDefaultOracleRankCap) return brute_force_min_ply(h).witness;
      return best_of(h, seed);
    };
  } else {
    throw UsageError("unknown bag basis method '" + name + "'");
  }
  return [local](const Graph& g, const EdgeSet& edges) {
    const Subgraph sub = extract_subgraph(g, edges);
    return lift_to_host(sub, local(sub.graph), idx(g.edge_count()));
  };
}

}  // namespace plybasis
