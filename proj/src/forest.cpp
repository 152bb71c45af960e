#include "plybasis/forest.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "plybasis/cycle_space.hpp"
#include "plybasis/detail/union_find.hpp"
#include "plybasis/errors.hpp"

namespace plybasis {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

}  // namespace

Forest::Forest(const Graph& g, EdgeSet edges)
    : Forest(g, std::move(edges), std::vector<char>(idx(g.vertex_count()), 1)) {}

Forest::Forest(const Graph& g, EdgeSet edges, std::vector<char> members)
    : graph_(&g), edges_(std::move(edges)), members_(std::move(members)) {
  build();
}

void Forest::build() {
  const Graph& g = *graph_;
  const std::size_t n = idx(g.vertex_count());
  if (edges_.universe_size() != idx(g.edge_count())) throw UsageError("forest edges are over a different graph");
  if (members_.size() != n) throw UsageError("membership mask has the wrong length");

  detail::UnionFind uf(g.vertex_count());
  degree_.assign(n, 0);
  edges_.for_each([&](int e) {
    const auto [u, v] = g.edge(e);
    if (!members_[idx(u)] || !members_[idx(v)]) {
      throw UsageError("forest edge " + std::to_string(e) + " touches a non-member vertex");
    }
    if (!uf.unite(u, v)) throw UsageError("edge set is not acyclic (edge " + std::to_string(e) + " closes a cycle)");
    ++degree_[idx(u)];
    ++degree_[idx(v)];
  });

  component_.assign(n, -1);
  parent_.assign(n, -1);
  parent_edge_.assign(n, -1);
  depth_.assign(n, 0);
  preorder_.clear();

  struct Frame {
    int vertex;
    std::size_t next;
  };
  std::vector<Frame> stack;
  int label = 0;
  for (int root = 0; root < g.vertex_count(); ++root) {
    if (!members_[idx(root)] || component_[idx(root)] != -1) continue;
    component_[idx(root)] = label;
    preorder_.push_back(root);
    stack.push_back({root, 0});
    while (!stack.empty()) {
      auto& f = stack.back();
      const auto inc = g.incident(f.vertex);
      if (f.next == inc.size()) {
        stack.pop_back();
        continue;
      }
      const auto [w, e] = inc[f.next++];
      if (!edges_.test(idx(e)) || component_[idx(w)] != -1) continue;
      component_[idx(w)] = label;
      parent_[idx(w)] = f.vertex;
      parent_edge_[idx(w)] = e;
      depth_[idx(w)] = depth_[idx(f.vertex)] + 1;
      preorder_.push_back(w);
      stack.push_back({w, 0});
    }
    ++label;
  }
}

std::vector<int> Forest::vertices() const {
  std::vector<int> out;
  for (std::size_t v = 0; v < members_.size(); ++v)
    if (members_[v]) out.push_back(static_cast<int>(v));
  return out;
}

bool Forest::connected(int v, int w) const {
  return contains(v) && contains(w) && component(v) == component(w);
}

std::vector<int> Forest::path_edges(int v, int w) const {
  if (!graph_->valid_vertex(v) || !graph_->valid_vertex(w)) throw UsageError("path query on an invalid vertex");
  if (!connected(v, w)) {
    throw DisconnectedError("vertices " + std::to_string(v) + " and " + std::to_string(w) +
                            " lie in different forest components");
  }
  std::vector<int> from_v, from_w;
  while (depth(v) > depth(w)) {
    from_v.push_back(parent_edge(v));
    v = parent(v);
  }
  while (depth(w) > depth(v)) {
    from_w.push_back(parent_edge(w));
    w = parent(w);
  }
  while (v != w) {
    from_v.push_back(parent_edge(v));
    v = parent(v);
    from_w.push_back(parent_edge(w));
    w = parent(w);
  }
  from_v.insert(from_v.end(), from_w.rbegin(), from_w.rend());
  return from_v;
}

EdgeSet Forest::path(int v, int w) const {
  const auto ids = path_edges(v, w);
  return EdgeSet::from_ids(edges_.universe_size(), ids);
}

Forest spanning_forest(const Graph& g, const EdgeSet& h, std::vector<char> members) {
  if (members.size() != idx(g.vertex_count())) throw UsageError("membership mask has the wrong length");
  EdgeSet tree(idx(g.edge_count()));
  std::vector<char> seen(idx(g.vertex_count()), 0);
  std::deque<int> queue;
  for (int root = 0; root < g.vertex_count(); ++root) {
    if (!members[idx(root)] || seen[idx(root)]) continue;
    seen[idx(root)] = 1;
    queue.push_back(root);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (const auto& [w, e] : g.incident(v)) {
        if (!h.test(idx(e)) || seen[idx(w)]) continue;
        seen[idx(w)] = 1;
        tree.set(idx(e));
        queue.push_back(w);
      }
    }
  }
  return Forest(g, std::move(tree), std::move(members));
}

Forest spanning_forest(const Graph& g) {
  return spanning_forest(g, g.all_edges(), std::vector<char>(idx(g.vertex_count()), 1));
}

EdgeSet forest_path(const Forest& f, int v, int w) { return f.path(v, w); }

Forest steiner_subforest(const Forest& f, std::span<const int> terminals) {
  const Graph& g = f.graph();
  std::vector<char> terminal(idx(g.vertex_count()), 0);
  for (int s : terminals) {
    if (!g.valid_vertex(s) || !f.contains(s)) {
      throw UsageError("terminal " + std::to_string(s) + " is not a vertex of the forest");
    }
    terminal[idx(s)] = 1;
  }

  EdgeSet kept = f.edges();
  std::vector<int> deg(idx(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) deg[idx(v)] = f.degree(v);

  std::vector<int> leaves;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (deg[idx(v)] == 1 && !terminal[idx(v)]) leaves.push_back(v);
  while (!leaves.empty()) {
    const int v = leaves.back();
    leaves.pop_back();
    if (deg[idx(v)] != 1) continue;
    for (const auto& [w, e] : g.incident(v)) {
      if (!kept.test(idx(e))) continue;
      kept.reset(idx(e));
      --deg[idx(v)];
      if (--deg[idx(w)] == 1 && !terminal[idx(w)]) leaves.push_back(w);
      break;
    }
  }

  std::vector<char> members = terminal;
  kept.for_each([&](int e) {
    members[idx(g.edge(e).u)] = 1;
    members[idx(g.edge(e).v)] = 1;
  });
  return Forest(g, std::move(kept), std::move(members));
}

Skeleton skeleton(const Forest& f, std::span<const int> terminals) {
  const Graph& g = f.graph();
  const Forest steiner = steiner_subforest(f, terminals);

  std::vector<char> is_node(idx(g.vertex_count()), 0);
  for (int s : terminals) is_node[idx(s)] = 1;
  for (int v : steiner.vertices())
    if (steiner.degree(v) >= 3) is_node[idx(v)] = 1;

  Skeleton sk;
  sk.steiner_edges = steiner.edges();
  for (int v = 0; v < g.vertex_count(); ++v)
    if (is_node[idx(v)]) sk.vertices.push_back(v);

  EdgeSet used(steiner.edges().universe_size());
  for (int start : sk.vertices) {
    for (const auto& [first_w, first_e] : g.incident(start)) {
      if (!steiner.edges().test(idx(first_e)) || used.test(idx(first_e))) continue;
      SkeletonEdge se{start, -1, {first_e}, EdgeSet(used.universe_size())};
      used.set(idx(first_e));
      int previous_edge = first_e;
      int current = first_w;
      while (!is_node[idx(current)]) {
        // suppressed vertex: exactly one other Steiner edge
        for (const auto& [w, e] : g.incident(current)) {
          if (e == previous_edge || !steiner.edges().test(idx(e))) continue;
          se.path.push_back(e);
          used.set(idx(e));
          previous_edge = e;
          current = w;
          break;
        }
      }
      se.v = current;
      se.expansion = EdgeSet::from_ids(used.universe_size(), se.path);
      sk.edges.push_back(std::move(se));
    }
  }
  return sk;
}

int ply_along(const Forest& f, int v, int w, const GeneratingSet& basis) {
  int best = 0;
  for (int e : f.path_edges(v, w)) best = std::max(best, basis.ply(e));
  return best;
}

int ply_along(const SkeletonEdge& e, const GeneratingSet& basis) {
  int best = 0;
  for (int h : e.path) best = std::max(best, basis.ply(h));
  return best;
}

LabelledGraph skeleton_union(std::span<const Skeleton* const> parts, std::size_t host_edge_count) {
  std::map<int, int> compact;
  for (const Skeleton* part : parts)
    for (int v : part->vertices) compact.emplace(v, 0);
  LabelledGraph out;
  out.host_edge_count = host_edge_count;
  for (auto& [host, id] : compact) {
    id = static_cast<int>(out.host_vertex.size());
    out.host_vertex.push_back(host);
  }

  std::vector<Edge> edges;
  std::map<std::pair<int, int>, int> seen_pairs;
  for (const Skeleton* part : parts) {
    for (const auto& se : part->edges) {
      int a = compact.at(se.u);
      int b = compact.at(se.v);
      if (a > b) std::swap(a, b);
      if (seen_pairs.emplace(std::pair{a, b}, static_cast<int>(edges.size())).second) {
        edges.push_back({a, b});
        out.label.push_back(se.expansion);
        continue;
      }
      const int mid = static_cast<int>(out.host_vertex.size());
      out.host_vertex.push_back(-1);
      edges.push_back({a, mid});
      out.label.push_back(se.expansion);
      edges.push_back({mid, b});
      out.label.push_back(EdgeSet(host_edge_count));
    }
  }
  out.graph = Graph(static_cast<int>(out.host_vertex.size()), std::move(edges));
  return out;
}

GeneratingSet lift_skeleton_cycles(const Graph& host, const LabelledGraph& labelled, const GeneratingSet& cycles) {
  if (cycles.edge_count() != static_cast<std::size_t>(labelled.graph.edge_count())) {
    throw UsageError("lift_skeleton_cycles: cycles are not over the labelled graph");
  }
  GeneratingSet out(static_cast<std::size_t>(host.edge_count()));
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    EdgeSet lifted(static_cast<std::size_t>(host.edge_count()));
    cycles[i].for_each([&](int e) { lifted ^= labelled.label[idx(e)]; });
    if (lifted.none()) continue;
    for (auto& c : veblen_decompose(host, lifted)) out.add(std::move(c), cycles.tag(i));
  }
  return out;
}

}  // namespace plybasis
