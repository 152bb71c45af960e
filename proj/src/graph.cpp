#include "plybasis/graph.hpp"

#include <algorithm>
#include <string>

#include "plybasis/errors.hpp"

namespace plybasis {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

}  // namespace

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), adjacency_(idx(std::max(vertex_count, 0))) {
  if (vertex_count < 0) throw UsageError("negative vertex count");
  index_.reserve(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    if (!valid_vertex(u) || !valid_vertex(v)) {
      throw UsageError("edge " + std::to_string(e) + " has an endpoint outside 0.." +
                       std::to_string(vertex_count - 1));
    }
    if (u == v) throw UsageError("self-loop at vertex " + std::to_string(u));
    if (!index_.emplace(key(u, v), static_cast<int>(e)).second) {
      throw UsageError("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    adjacency_[idx(u)].push_back({v, static_cast<int>(e)});
    adjacency_[idx(v)].push_back({u, static_cast<int>(e)});
  }
}

std::uint64_t Graph::key(int u, int v) noexcept {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) | static_cast<std::uint32_t>(v);
}

std::optional<int> Graph::edge_id(int u, int v) const {
  auto it = index_.find(key(u, v));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

EdgeSet Graph::all_edges() const {
  EdgeSet s(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) s.set(e);
  return s;
}

EdgeSet Graph::induced(std::span<const int> vertices) const {
  std::vector<char> in(idx(vertex_count_), 0);
  for (int v : vertices) {
    if (!valid_vertex(v)) throw UsageError("vertex " + std::to_string(v) + " out of range");
    in[idx(v)] = 1;
  }
  EdgeSet s(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (in[idx(edges_[e].u)] && in[idx(edges_[e].v)]) s.set(e);
  }
  return s;
}

std::vector<int> degrees(const Graph& g, const EdgeSet& h) {
  if (h.universe_size() != static_cast<std::size_t>(g.edge_count())) {
    throw UsageError("edge set does not belong to this graph");
  }
  std::vector<int> deg(idx(g.vertex_count()), 0);
  h.for_each([&](int e) {
    ++deg[idx(g.edge(e).u)];
    ++deg[idx(g.edge(e).v)];
  });
  return deg;
}

bool is_eulerian(const Graph& g, const EdgeSet& h) {
  const auto deg = degrees(g, h);
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; });
}

bool is_cycle(const Graph& g, const EdgeSet& h) {
  if (h.none()) return false;
  const auto deg = degrees(g, h);
  int touched = 0;
  for (int d : deg) {
    if (d != 0 && d != 2) return false;
    touched += d != 0;
  }
  // a 2-regular graph is a single cycle iff it is connected: |E| = |V| and one component
  return cycle_rank(g, h) == 1 && static_cast<int>(h.count()) == touched;
}

std::vector<EdgeSet> veblen_decompose(const Graph& g, const EdgeSet& h) {
  if (!is_eulerian(g, h)) throw PreconditionError("veblen_decompose: subgraph has a vertex of odd degree");

  const std::size_t m = h.universe_size();
  EdgeSet remaining = h;
  std::vector<std::size_t> cursor(idx(g.vertex_count()), 0);
  std::vector<int> position(idx(g.vertex_count()), -1);
  std::vector<EdgeSet> cycles;

  auto next_unused = [&](int v) -> const Incidence* {
    const auto inc = g.incident(v);
    auto& c = cursor[idx(v)];
    while (c < inc.size()) {
      if (remaining.test(idx(inc[c].edge))) return &inc[c];
      ++c;
    }
    return nullptr;
  };

  std::vector<int> walk_vertices;
  std::vector<int> walk_edges;
  for (int start = 0; start < g.vertex_count(); ++start) {
    while (next_unused(start) != nullptr) {
      walk_vertices.assign(1, start);
      walk_edges.clear();
      position[idx(start)] = 0;
      int current = start;
      while (true) {
        const Incidence* step = next_unused(current);
        remaining.reset(idx(step->edge));
        const int w = step->neighbor;
        const int at = position[idx(w)];
        if (at == -1) {
          position[idx(w)] = static_cast<int>(walk_vertices.size());
          walk_vertices.push_back(w);
          walk_edges.push_back(step->edge);
          current = w;
          continue;
        }
        // w repeats: splice off the closed part of the walk
        EdgeSet cycle(m);
        for (std::size_t j = idx(at); j < walk_edges.size(); ++j) cycle.set(idx(walk_edges[j]));
        cycle.set(idx(step->edge));
        cycles.push_back(std::move(cycle));
        for (std::size_t j = idx(at) + 1; j < walk_vertices.size(); ++j) position[idx(walk_vertices[j])] = -1;
        walk_vertices.resize(idx(at) + 1);
        walk_edges.resize(idx(at));
        current = w;
        if (walk_edges.empty()) break;
      }
      position[idx(start)] = -1;
    }
  }
  return cycles;
}

std::vector<int> components(const Graph& g, const EdgeSet& h) {
  if (h.universe_size() != static_cast<std::size_t>(g.edge_count())) {
    throw UsageError("edge set does not belong to this graph");
  }
  std::vector<int> label(idx(g.vertex_count()), -1);
  std::vector<int> stack;
  int next = 0;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (label[idx(s)] != -1) continue;
    label[idx(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const auto& [w, e] : g.incident(v)) {
        if (h.test(idx(e)) && label[idx(w)] == -1) {
          label[idx(w)] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<int> components(const Graph& g) { return components(g, g.all_edges()); }

namespace {

int count_labels(const std::vector<int>& label) {
  return label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
}

}  // namespace

int component_count(const Graph& g) { return count_labels(components(g)); }

int cycle_rank(const Graph& g) { return g.edge_count() - g.vertex_count() + component_count(g); }

int cycle_rank(const Graph& g, const EdgeSet& h) {
  // untouched vertices are singleton components and cancel out
  return static_cast<int>(h.count()) - g.vertex_count() + count_labels(components(g, h));
}

EdgeSet cycle_edges(const Graph& g, const EdgeSet& h) {
  if (h.universe_size() != static_cast<std::size_t>(g.edge_count())) {
    throw UsageError("edge set does not belong to this graph");
  }
  const std::size_t n = idx(g.vertex_count());
  std::vector<int> disc(n, -1), low(n, 0);
  EdgeSet result = h;

  struct Frame {
    int vertex;
    int via_edge;
    std::size_t next;
  };
  std::vector<Frame> stack;
  int timer = 0;
  for (int root = 0; root < g.vertex_count(); ++root) {
    if (disc[idx(root)] != -1) continue;
    disc[idx(root)] = low[idx(root)] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      auto& f = stack.back();
      const auto inc = g.incident(f.vertex);
      if (f.next < inc.size()) {
        const auto [w, e] = inc[f.next++];
        if (!h.test(idx(e)) || e == f.via_edge) continue;
        if (disc[idx(w)] == -1) {
          disc[idx(w)] = low[idx(w)] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[idx(f.vertex)] = std::min(low[idx(f.vertex)], disc[idx(w)]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        const int parent = stack.back().vertex;
        low[idx(parent)] = std::min(low[idx(parent)], low[idx(done.vertex)]);
        if (low[idx(done.vertex)] > disc[idx(parent)]) result.reset(idx(done.via_edge));
      }
    }
  }
  return result;
}

Graph make_complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph make_cycle(int n) {
  if (n < 3) throw UsageError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) edges.push_back({u, (u + 1) % n});
  return Graph(n, std::move(edges));
}

Graph make_path(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
  return Graph(n, std::move(edges));
}

Graph make_grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw UsageError("grid dimensions must be positive");
  std::vector<Edge> edges;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  }
  return Graph(rows * cols, std::move(edges));
}

}  // namespace plybasis
