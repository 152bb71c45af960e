// Shortest-cycle generating-set heuristics: the random-deletion loop and
// its ply-maximizing variant.

#include <algorithm>
#include <deque>
#include <limits>

#include "plybasis/builders.hpp"
#include "plybasis/rng.hpp"

namespace plybasis {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

// Finds shortest cycles of a shrinking edge set.
//
// `limit_` is a lower bound on the current girth. Because edges are only
// ever removed, a vertex with no cycle of length <= limit_ through it never
// gains one, so the scan resumes from `cursor_` instead of vertex 0.
class ShortestCycleFinder {
 public:
  ShortestCycleFinder(const Graph& g, int at_least)
      : g_(g),
        limit_(std::max(at_least, 3)),
        dist_(idx(g.vertex_count()), -1),
        parent_edge_(idx(g.vertex_count()), -1) {}

  EdgeSet next(const EdgeSet& live) {
    while (limit_ <= g_.vertex_count()) {
      for (; cursor_ < g_.vertex_count(); ++cursor_) {
        EdgeSet found = through(cursor_, live);
        if (found.any()) return found;
      }
      ++limit_;
      cursor_ = 0;
    }
    return EdgeSet(live.universe_size());
  }

 private:
  // A cycle of length <= limit_ through `source`, if one exists.
  EdgeSet through(int source, const EdgeSet& live) {
    const int radius = limit_ / 2;
    visited_.clear();
    std::deque<int> queue{source};
    dist_[idx(source)] = 0;
    parent_edge_[idx(source)] = -1;
    visited_.push_back(source);
    EdgeSet result(live.universe_size());
    while (!queue.empty() && result.none()) {
      const int u = queue.front();
      queue.pop_front();
      for (const auto& [w, e] : g_.incident(u)) {
        if (!live.test(idx(e)) || e == parent_edge_[idx(u)]) continue;
        if (dist_[idx(w)] == -1) {
          if (dist_[idx(u)] + 1 > radius) continue;
          dist_[idx(w)] = dist_[idx(u)] + 1;
          parent_edge_[idx(w)] = e;
          visited_.push_back(w);
          queue.push_back(w);
        } else if (e != parent_edge_[idx(w)] && dist_[idx(u)] + dist_[idx(w)] + 1 <= limit_) {
          result = close(u, w, e);
          break;
        }
      }
    }
    for (int v : visited_) dist_[idx(v)] = -1;
    return result;
  }

  EdgeSet close(int u, int w, int chord) const {
    EdgeSet cycle(idx(g_.edge_count()));
    cycle.set(idx(chord));
    auto climb = [&](int& x) {
      const int e = parent_edge_[idx(x)];
      cycle.flip(idx(e));
      x = g_.edge(e).other(x);
    };
    while (dist_[idx(u)] > dist_[idx(w)]) climb(u);
    while (dist_[idx(w)] > dist_[idx(u)]) climb(w);
    while (u != w) {
      climb(u);
      climb(w);
    }
    return cycle;
  }

  const Graph& g_;
  int limit_;
  int cursor_ = 0;
  std::vector<int> dist_;
  std::vector<int> parent_edge_;
  std::vector<int> visited_;
};

template <typename Choose>
GeneratingSet shortest_cycle_loop(const Graph& g, const char* tag, Choose&& choose) {
  GeneratingSet out(idx(g.edge_count()));
  EdgeSet residual = g.all_edges();
  ShortestCycleFinder finder(g, 3);
  while (true) {
    EdgeSet cycle = finder.next(residual);
    if (cycle.none()) break;
    const auto ids = cycle.ids();
    out.add(std::move(cycle), tag);
    residual.reset(idx(choose(ids, out)));
  }
  return out;
}

}  // namespace

EdgeSet shortest_cycle(const Graph& g, const EdgeSet& edges, int at_least) {
  ShortestCycleFinder finder(g, at_least);
  return finder.next(edges);
}

GeneratingSet fh_generating_set(const Graph& g, std::uint64_t seed) {
  Rng rng(seed);
  return shortest_cycle_loop(g, "fh", [&](const std::vector<int>& ids, const GeneratingSet&) {
    return ids[static_cast<std::size_t>(rng.below(ids.size()))];
  });
}

GeneratingSet maxply_generating_set(const Graph& g, MaxPlyMode mode, std::uint64_t seed) {
  Rng rng(seed);
  if (mode == MaxPlyMode::Deterministic) {
    return shortest_cycle_loop(g, "maxply", [](const std::vector<int>& ids, const GeneratingSet& current) {
      int best = ids.front();
      for (int e : ids)
        if (current.ply(e) > current.ply(best)) best = e;  // ids ascend, so ties keep the lowest
      return best;
    });
  }
  return shortest_cycle_loop(g, "maxply", [&](const std::vector<int>& ids, const GeneratingSet& current) {
    std::uint64_t total = 0;
    for (int e : ids) total += static_cast<std::uint64_t>(current.ply(e));
    std::uint64_t pick = rng.below(total);
    for (int e : ids) {
      const auto w = static_cast<std::uint64_t>(current.ply(e));
      if (pick < w) return e;
      pick -= w;
    }
    return ids.back();
  });
}

}  // namespace plybasis
