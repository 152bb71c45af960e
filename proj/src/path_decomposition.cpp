#include "plybasis/path_decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iterator>
#include <string>
#include <unordered_set>

#include "plybasis/errors.hpp"

namespace plybasis {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

PathDecomposition::PathDecomposition(std::vector<std::vector<int>> bags) : bags_(std::move(bags)) {
  int largest = 0;
  for (auto& bag : bags_) {
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    largest = std::max(largest, static_cast<int>(bag.size()));
  }
  width_ = std::max(largest - 1, 0);

  normal_ = !bags_.empty() && bags_.front().empty();
  for (std::size_t i = 1; normal_ && i < bags_.size(); ++i) {
    const std::size_t expected = std::min(i, idx(width_) + 1);
    std::vector<int> fresh;
    std::set_difference(bags_[i].begin(), bags_[i].end(), bags_[i - 1].begin(), bags_[i - 1].end(),
                        std::back_inserter(fresh));
    normal_ = bags_[i].size() == expected && fresh.size() == 1;
  }
}

std::vector<int> first_bag(int vertex_count, const PathDecomposition& d) {
  std::vector<int> first(idx(vertex_count), -1);
  for (std::size_t i = d.size(); i-- > 0;)
    for (int v : d.bag(i))
      if (v >= 0 && v < vertex_count) first[idx(v)] = static_cast<int>(i);
  return first;
}

std::optional<Violation> validate(const Graph& g, const PathDecomposition& d) {
  const std::size_t n = idx(g.vertex_count());
  std::vector<int> first(n, -1), last(n, -1), count(n, 0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (int v : d.bag(i)) {
      if (!g.valid_vertex(v)) {
        return Violation{Violation::Kind::VertexOutOfRange, v, -1,
                         "bag " + std::to_string(i) + " contains unknown vertex " + std::to_string(v)};
      }
      if (first[idx(v)] == -1) first[idx(v)] = static_cast<int>(i);
      last[idx(v)] = static_cast<int>(i);
      ++count[idx(v)];
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (count[v] != 0 && count[v] != last[v] - first[v] + 1) {
      return Violation{Violation::Kind::NotContiguous, static_cast<int>(v), -1,
                       "bags containing vertex " + std::to_string(v) + " are not contiguous"};
    }
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    if (count[idx(u)] == 0 || count[idx(v)] == 0 || std::max(first[idx(u)], first[idx(v)]) > std::min(last[idx(u)], last[idx(v)])) {
      return Violation{Violation::Kind::EdgeNotCovered, -1, e,
                       "no bag contains both ends of edge " + std::to_string(u) + "-" + std::to_string(v)};
    }
  }
  return std::nullopt;
}

PathDecomposition normalize(const Graph& g, const PathDecomposition& d) {
  if (auto bad = validate(g, d)) throw PreconditionError("normalize: invalid decomposition: " + bad->message);
  const int t = d.width();
  const std::size_t n = idx(g.vertex_count());

  // Live interval [first, last] of each vertex; uncovered vertices get fresh singleton bags at the end.
  std::vector<int> first(n, -1), last(n, -1);
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (int v : d.bag(i)) {
      if (first[idx(v)] == -1) first[idx(v)] = static_cast<int>(i);
      last[idx(v)] = static_cast<int>(i);
    }
  }
  int extra = static_cast<int>(d.size());
  for (std::size_t v = 0; v < n; ++v) {
    if (first[v] == -1) first[v] = last[v] = extra++;
  }

  std::vector<int> order(n);
  for (std::size_t v = 0; v < n; ++v) order[v] = static_cast<int>(v);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return first[idx(a)] < first[idx(b)]; });

  std::vector<std::vector<int>> bags{{}};
  std::vector<int> current;
  for (int x : order) {
    if (static_cast<int>(current.size()) == t + 1) {
      // Evict the vertex that died earliest; one always exists because the live
      // vertices plus x fit in the original bag first[x].
      auto victim = std::min_element(current.begin(), current.end(), [&](int a, int b) {
        return std::pair(last[idx(a)], a) < std::pair(last[idx(b)], b);
      });
      if (last[idx(*victim)] >= first[idx(x)]) {
        throw std::logic_error("normalize: no evictable vertex (decomposition width miscounted)");
      }
      current.erase(victim);
    }
    current.insert(std::lower_bound(current.begin(), current.end(), x), x);
    bags.push_back(current);
  }
  return PathDecomposition(std::move(bags));
}

PathDecomposition decomposition_from_order(const Graph& g, const std::vector<int>& order) {
  const std::size_t n = idx(g.vertex_count());
  if (order.size() != n) throw UsageError("ordering must list every vertex exactly once");
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.valid_vertex(order[i]) || pos[idx(order[i])] != -1) throw UsageError("ordering is not a permutation");
    pos[idx(order[i])] = static_cast<int>(i);
  }
  std::vector<int> reach(n);
  for (std::size_t v = 0; v < n; ++v) {
    reach[v] = pos[v];
    for (const auto& inc : g.incident(static_cast<int>(v))) reach[v] = std::max(reach[v], pos[idx(inc.neighbor)]);
  }
  std::vector<std::vector<int>> bags;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> bag{order[i]};
    for (std::size_t j = 0; j < i; ++j)
      if (reach[idx(order[j])] >= static_cast<int>(i)) bag.push_back(order[j]);
    bags.push_back(std::move(bag));
  }
  if (bags.empty()) bags.emplace_back();
  return PathDecomposition(std::move(bags));
}

namespace {

using Mask = std::uint64_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(idx(g.vertex_count()), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[idx(u)] |= Mask{1} << v;
    adj[idx(v)] |= Mask{1} << u;
  }
  return adj;
}

Mask boundary(const std::vector<Mask>& adj, Mask set) {
  Mask out = 0;
  for (Mask rest = set; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    if ((adj[idx(v)] & ~set) != 0) out |= Mask{1} << v;
  }
  return out;
}

// Exhaustive DP: best[S] = max(|∂S|, min_v best[S - v]).
std::vector<std::uint8_t> subset_dp(const std::vector<Mask>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::uint8_t> best(std::size_t{1} << n, 0);
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    int low = 255;
    for (Mask rest = s; rest != 0; rest &= rest - 1) {
      low = std::min<int>(low, best[s & ~(rest & (~rest + 1))]);
    }
    best[s] = static_cast<std::uint8_t>(std::max(low, std::popcount(boundary(adj, s))));
  }
  return best;
}

class SeparationSearch {
 public:
  SeparationSearch(const std::vector<Mask>& adj, int limit) : adj_(adj), limit_(limit) {
    full_ = adj.size() == 64 ? ~Mask{0} : (Mask{1} << adj.size()) - 1;
  }

  bool run() { return extend(0, 0); }
  const std::vector<int>& order() const { return order_; }

 private:
  Mask grow(Mask set, Mask border, int v) const {
    const Mask next = set | (Mask{1} << v);
    Mask out = 0;
    for (Mask rest = border | (Mask{1} << v); rest != 0; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      if ((adj_[idx(u)] & ~next) != 0) out |= Mask{1} << u;
    }
    return out;
  }

  bool extend(Mask set, Mask border) {
    const std::size_t depth_on_entry = order_.size();
    // A vertex whose neighbours are all placed can go next without loss.
    bool moved = true;
    while (moved) {
      moved = false;
      for (Mask rest = full_ & ~set; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        if ((adj_[idx(v)] & ~set) == 0) {
          border = grow(set, border, v);
          set |= Mask{1} << v;
          order_.push_back(v);
          moved = true;
        }
      }
    }
    if (set == full_) return true;
    if (failed_.contains(set)) {
      order_.resize(depth_on_entry);
      return false;
    }

    std::vector<std::pair<int, int>> candidates;  // (new boundary size, vertex)
    for (Mask rest = full_ & ~set; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const int size = std::popcount(grow(set, border, v));
      if (size <= limit_) candidates.emplace_back(size, v);
    }
    std::sort(candidates.begin(), candidates.end());
    for (const auto& [size, v] : candidates) {
      order_.push_back(v);
      if (extend(set | (Mask{1} << v), grow(set, border, v))) return true;
      order_.pop_back();
    }
    failed_.insert(set);
    order_.resize(depth_on_entry);
    return false;
  }

  const std::vector<Mask>& adj_;
  int limit_;
  Mask full_;
  std::vector<int> order_;
  std::unordered_set<Mask> failed_;
};

int degeneracy(const std::vector<Mask>& adj) {
  Mask alive = adj.size() == 64 ? ~Mask{0} : (Mask{1} << adj.size()) - 1;
  int best = 0;
  while (alive != 0) {
    int pick = -1, low = 1 << 30;
    for (Mask rest = alive; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const int d = std::popcount(adj[idx(v)] & alive);
      if (d < low) {
        low = d;
        pick = v;
      }
    }
    best = std::max(best, low);
    alive &= ~(Mask{1} << pick);
  }
  return best;
}

}  // namespace

int pathwidth_subset_dp(const Graph& g) {
  if (g.vertex_count() > 24) throw SizeError("subset DP limited to 24 vertices");
  if (g.vertex_count() == 0) return 0;
  const auto adj = adjacency_masks(g);
  return subset_dp(adj).back();
}

PathwidthResult exact_pathwidth(const Graph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap || n > 64) {
    throw SizeError("exact_pathwidth: " + std::to_string(n) + " vertices exceeds the cap of " +
                    std::to_string(std::min(cap, 64)));
  }
  if (n == 0) return {0, PathDecomposition(std::vector<std::vector<int>>{std::vector<int>{}}), {}};
  const auto adj = adjacency_masks(g);

  std::vector<int> order;
  int width = 0;
  if (n <= 18) {
    const auto best = subset_dp(adj);
    width = best.back();
    order.assign(idx(n), -1);
    Mask set = (Mask{1} << n) - 1;
    for (int position = n - 1; position >= 0; --position) {
      for (Mask rest = set; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        if (best[set & ~(Mask{1} << v)] <= width) {
          order[idx(position)] = v;
          set &= ~(Mask{1} << v);
          break;
        }
      }
    }
  } else {
    for (width = degeneracy(adj);; ++width) {
      SeparationSearch search(adj, width);
      if (search.run()) {
        order = search.order();
        break;
      }
    }
  }
  return {width, decomposition_from_order(g, order), order};
}

std::vector<EdgeSet> bag_graphs(const Graph& g, const PathDecomposition& d) {
  std::vector<EdgeSet> out;
  out.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    EdgeSet h = g.induced(d.bag(i));
    if (i > 0) h.subtract(g.induced(intersect(d.bag(i - 1), d.bag(i))));
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<std::vector<int>> adhesions(const PathDecomposition& d) {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i + 1 < d.size(); ++i) out.push_back(intersect(d.bag(i), d.bag(i + 1)));
  return out;
}

int max_adhesion(const PathDecomposition& d) {
  int best = 0;
  for (const auto& a : adhesions(d)) best = std::max(best, static_cast<int>(a.size()));
  return best;
}

}  // namespace plybasis
