// Auditors. Everything here is recomputed from raw graphs, decompositions
// and element lists; the builders' cached plies and forests are not trusted.

#include "plybasis/verification.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <sstream>

#include "plybasis/detail/union_find.hpp"
#include "plybasis/errors.hpp"

namespace plybasis {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

// Plain elimination on word vectors, kept apart from Gf2Echelon on purpose.
std::size_t local_rank(const std::vector<EdgeSet>& rows) {
  std::vector<std::vector<std::uint64_t>> basis;
  std::vector<std::size_t> pivots;
  for (const EdgeSet& r : rows) {
    std::vector<std::uint64_t> v(r.words().begin(), r.words().end());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const std::size_t p = pivots[j];
      if ((v[p / 64] >> (p % 64)) & 1U)
        for (std::size_t w = 0; w < v.size(); ++w) v[w] ^= basis[j][w];
    }
    std::size_t pivot = v.size() * 64;
    for (std::size_t w = 0; w < v.size(); ++w) {
      if (v[w] != 0) {
        pivot = w * 64 + static_cast<std::size_t>(std::countr_zero(v[w]));
        break;
      }
    }
    if (pivot == v.size() * 64) continue;
    // keep rows fully reduced so later pivots stay unique
    for (std::size_t j = 0; j < basis.size(); ++j)
      if ((basis[j][pivot / 64] >> (pivot % 64)) & 1U)
        for (std::size_t w = 0; w < v.size(); ++w) basis[j][w] ^= v[w];
    basis.push_back(std::move(v));
    pivots.push_back(pivot);
  }
  return basis.size();
}

int local_cycle_rank(const Graph& g, const EdgeSet* edges) {
  detail::UnionFind uf(g.vertex_count());
  int rank = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (edges != nullptr && !edges->test(idx(e))) continue;
    if (!uf.unite(g.edge(e).u, g.edge(e).v)) ++rank;
  }
  return rank;
}

bool local_eulerian(const Graph& g, const EdgeSet& h) {
  std::vector<int> parity(idx(g.vertex_count()), 0);
  h.for_each([&](int e) {
    parity[idx(g.edge(e).u)] ^= 1;
    parity[idx(g.edge(e).v)] ^= 1;
  });
  return std::none_of(parity.begin(), parity.end(), [](int p) { return p != 0; });
}

std::vector<int> ply_of_prefix(const GeneratingSet& basis, std::size_t end, std::size_t m) {
  std::vector<int> ply(m, 0);
  for (std::size_t i = 0; i < end; ++i) basis[i].for_each([&](int e) { ++ply[idx(e)]; });
  return ply;
}

int max_over(const std::vector<int>& path, const std::vector<int>& ply) {
  int best = 0;
  for (int e : path) best = std::max(best, ply[idx(e)]);
  return best;
}

// birth(e) = max of the first bags of its endpoints.
std::vector<int> birth_times(const Graph& g, const PathDecomposition& d) {
  std::vector<int> first(idx(g.vertex_count()), -1);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (int v : d.bag(i))
      if (first[idx(v)] == -1) first[idx(v)] = static_cast<int>(i);
  std::vector<int> birth(idx(g.edge_count()));
  for (int e = 0; e < g.edge_count(); ++e) birth[idx(e)] = std::max(first[idx(g.edge(e).u)], first[idx(g.edge(e).v)]);
  return birth;
}

std::vector<int> labels(const Graph& g, const EdgeSet& h) {
  detail::UnionFind uf(g.vertex_count());
  h.for_each([&](int e) { uf.unite(g.edge(e).u, g.edge(e).v); });
  std::vector<int> out(idx(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) out[idx(v)] = uf.find(v);
  return out;
}

Check table_check(std::string name, long rows, long violations, const std::string& first_violation) {
  Check c;
  c.name = std::move(name);
  c.rows = rows;
  c.observed = static_cast<double>(violations);
  c.pass = violations == 0;
  c.detail = violations == 0 ? std::to_string(rows) + " rows" : first_violation;
  return c;
}

}  // namespace

bool AuditReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Check verify_generating(const Graph& g, const GeneratingSet& basis) {
  Check c{"generating", static_cast<double>(local_cycle_rank(g, nullptr)), 0, true, {}, 0};
  c.rows = static_cast<long>(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].universe_size() != idx(g.edge_count()) || !local_eulerian(g, basis[i])) {
      c.pass = false;
      c.detail = "element " + std::to_string(i) + " is not an Eulerian subgraph";
      return c;
    }
  }
  c.observed = static_cast<double>(local_rank(basis.elements()));
  c.pass = c.observed == c.bound;
  if (!c.pass) c.detail = "rank below cycle rank";
  return c;
}

Check verify_ply_bound(const GeneratingSet& basis, int bound) {
  const auto ply = ply_of_prefix(basis, basis.size(), basis.edge_count());
  const int max = ply.empty() ? 0 : *std::max_element(ply.begin(), ply.end());
  Check c{"ply", static_cast<double>(bound), static_cast<double>(max), max <= bound, {}, 0};
  c.rows = static_cast<long>(ply.size());
  return c;
}

std::vector<std::vector<int>> audit_skeleton(const Graph& g, const EdgeSet& forest, const std::vector<int>& terminals) {
  const int n = g.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> adj(idx(n));
  forest.for_each([&](int e) {
    adj[idx(g.edge(e).u)].emplace_back(g.edge(e).v, e);
    adj[idx(g.edge(e).v)].emplace_back(g.edge(e).u, e);
  });

  // Steiner edges: union of tree paths between every terminal pair
  std::vector<char> steiner(idx(g.edge_count()), 0);
  std::vector<int> parent_edge(idx(n));
  std::vector<char> reached(idx(n));
  for (std::size_t a = 0; a < terminals.size(); ++a) {
    std::fill(reached.begin(), reached.end(), 0);
    std::deque<int> queue{terminals[a]};
    reached[idx(terminals[a])] = 1;
    parent_edge[idx(terminals[a])] = -1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (auto [w, e] : adj[idx(u)]) {
        if (reached[idx(w)]) continue;
        reached[idx(w)] = 1;
        parent_edge[idx(w)] = e;
        queue.push_back(w);
      }
    }
    for (std::size_t b = a + 1; b < terminals.size(); ++b) {
      int x = terminals[b];
      if (!reached[idx(x)]) continue;
      while (parent_edge[idx(x)] != -1) {
        const int e = parent_edge[idx(x)];
        steiner[idx(e)] = 1;
        x = g.edge(e).other(x);
      }
    }
  }

  std::vector<int> degree(idx(n), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!steiner[idx(e)]) continue;
    ++degree[idx(g.edge(e).u)];
    ++degree[idx(g.edge(e).v)];
  }
  std::vector<char> node(idx(n), 0);
  for (int v : terminals) node[idx(v)] = 1;
  for (int v = 0; v < n; ++v)
    if (degree[idx(v)] >= 3) node[idx(v)] = 1;

  std::vector<std::vector<int>> out;
  std::vector<char> used(idx(g.edge_count()), 0);
  for (int s = 0; s < n; ++s) {
    if (!node[idx(s)]) continue;
    for (auto [w0, e0] : adj[idx(s)]) {
      if (!steiner[idx(e0)] || used[idx(e0)]) continue;
      std::vector<int> path{e0};
      used[idx(e0)] = 1;
      int x = w0;
      while (!node[idx(x)]) {
        for (auto [w, e] : adj[idx(x)]) {
          if (!steiner[idx(e)] || used[idx(e)]) continue;
          used[idx(e)] = 1;
          path.push_back(e);
          x = w;
          break;
        }
      }
      out.push_back(std::move(path));
    }
  }
  return out;
}

Check claim_technical_audit(const Graph& g, const PathDecomposition& d, const GeneratingSet& basis,
                            const BuildTrace& trace, int t) {
  long rows = 0;
  long violations = 0;
  std::string first;
  for (const TraceStep& step : trace.steps) {
    const auto ply = ply_of_prefix(basis, step.end, basis.edge_count());
    const auto paths = audit_skeleton(g, step.forest, d.bag(idx(step.bag)));
    std::vector<int> path_ply;
    for (const auto& p : paths) path_ply.push_back(max_over(p, ply));
    for (int c = 0; c <= 2 * t - 1; ++c) {
      ++rows;
      const long count = std::count_if(path_ply.begin(), path_ply.end(), [&](int p) { return p >= 2 * c + 1; });
      if (count > 2 * t - c - 1) {
        if (violations++ == 0) {
          first = "step " + std::to_string(step.bag) + ", c = " + std::to_string(c) + ": " + std::to_string(count) +
                  " > " + std::to_string(2 * t - c - 1);
        }
      }
    }
  }
  return table_check("claim_technical", rows, violations, first);
}

Check claim_iold_audit(const Graph& g, const PathDecomposition& d, const GeneratingSet& basis, const BuildTrace& trace,
                       int k, int b) {
  const auto birth = birth_times(g, d);
  int d_max = 0;
  for (const TraceStep& step : trace.steps) {
    std::vector<int> local(basis.edge_count(), 0);
    for (std::size_t j = step.delta_begin; j < step.end; ++j) basis[j].for_each([&](int e) { ++local[idx(e)]; });
    for (int p : local) d_max = std::max(d_max, p);
  }
  const double scale = std::max(d_max, 1);

  const std::size_t last = d.size() - 1;
  std::vector<std::vector<int>> adhesion(d.size());
  for (std::size_t i = 0; i < last; ++i) {
    std::set_intersection(d.bag(i).begin(), d.bag(i).end(), d.bag(i + 1).begin(), d.bag(i + 1).end(),
                          std::back_inserter(adhesion[i]));
  }

  long rows = 0;
  long violations = 0;
  std::string first;
  for (const TraceStep& step : trace.steps) {
    const auto ply = ply_of_prefix(basis, step.end, basis.edge_count());
    const auto s = static_cast<std::size_t>(step.bag);
    std::vector<int> top(s + 1, -1);  // max ply among edges born at i
    for (int e = 0; e < g.edge_count(); ++e) {
      const int i = birth[idx(e)];
      if (i >= 0 && idx(i) <= s) top[idx(i)] = std::max(top[idx(i)], ply[idx(e)]);
    }
    for (std::size_t i = 0; i <= s; ++i) {
      ++rows;
      const double z = top[i] < 0 ? 0.0 : (top[i] - b) / scale;
      const double bound = 2.0 * k - 2.0 - z;
      long old = 0;
      for (const auto& p : audit_skeleton(g, step.forest, adhesion[i])) {
        if (std::all_of(p.begin(), p.end(), [&](int e) { return idx(birth[idx(e)]) <= i; })) ++old;
      }
      if (static_cast<double>(old) > bound + 1e-9 && violations++ == 0) {
        std::ostringstream msg;
        msg << "step " << s << ", i = " << i << ": " << old << " i-old edges > " << bound;
        first = msg.str();
      }
    }
  }
  Check c = table_check("claim_iold", rows, violations, first);
  if (c.pass) c.detail += ", d_max " + std::to_string(d_max);
  return c;
}

Check removal_audit(const Graph& g, const PathDecomposition& d, const GeneratingSet& basis, const BuildTrace& trace,
                    RemovalRule rule) {
  const auto birth = birth_times(g, d);
  long rows = 0;
  long violations = 0;
  std::string first;
  auto fail = [&](const std::string& why) {
    if (violations++ == 0) first = why;
  };
  for (const TraceStep& step : trace.steps) {
    const auto ply = ply_of_prefix(basis, step.end, basis.edge_count());
    EdgeSet live = step.forest_plus;
    const auto before = labels(g, live);
    for (const RemovedEdge& r : step.removed) {
      ++rows;
      // cycle edges of `live`: those whose endpoints stay joined without them
      std::vector<int> candidates;
      live.for_each([&](int e) {
        EdgeSet rest = live;
        rest.reset(idx(e));
        const auto lab = labels(g, rest);
        if (lab[idx(g.edge(e).u)] == lab[idx(g.edge(e).v)]) candidates.push_back(e);
      });
      if (std::find(candidates.begin(), candidates.end(), r.edge) == candidates.end()) {
        fail("step " + std::to_string(step.bag) + ": removed edge " + std::to_string(r.edge) + " was a bridge");
        break;
      }
      int best = candidates.front();
      for (int e : candidates) {
        const bool better = rule == RemovalRule::MaxPly ? ply[idx(e)] > ply[idx(best)] : birth[idx(e)] < birth[idx(best)];
        if (better) best = e;
      }
      const int key = rule == RemovalRule::MaxPly ? ply[idx(r.edge)] : birth[idx(r.edge)];
      if (best != r.edge || key != r.key) {
        fail("step " + std::to_string(step.bag) + ": removal of " + std::to_string(r.edge) + " breaks the rule");
      }
      live.reset(idx(r.edge));
    }
    ++rows;
    if (!(live == step.forest)) fail("step " + std::to_string(step.bag) + ": recorded forest differs from replay");
    const auto after = labels(g, live);
    bool same = true;
    for (int v = 0; v < g.vertex_count() && same; ++v)
      for (int w = v + 1; w < g.vertex_count() && same; ++w)
        same = (before[idx(v)] == before[idx(w)]) == (after[idx(v)] == after[idx(w)]);
    if (!same) fail("step " + std::to_string(step.bag) + ": removals changed the components");
    if (local_cycle_rank(g, &live) != 0) fail("step " + std::to_string(step.bag) + ": forest is not acyclic");
  }
  return table_check("removal", rows, violations, first);
}

MinPlyResult brute_force_min_ply(const Graph& g, int cap) {
  const int r = local_cycle_rank(g, nullptr);
  if (r > cap) {
    throw SizeError("brute_force_min_ply: cycle rank " + std::to_string(r) + " exceeds cap " + std::to_string(cap));
  }
  if (r > 6) throw SizeError("brute_force_min_ply: cycle rank above 6 is not supported");
  const std::size_t m = idx(g.edge_count());
  MinPlyResult result{0, GeneratingSet(m)};
  if (r == 0) return result;

  // fundamental cycles from a union-find forest
  std::vector<EdgeSet> gens;
  {
    detail::UnionFind uf(g.vertex_count());
    EdgeSet tree(m);
    std::vector<int> chords;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (uf.unite(g.edge(e).u, g.edge(e).v)) tree.set(idx(e));
      else chords.push_back(e);
    }
    const Forest f(g, tree);
    for (int e : chords) {
      EdgeSet c = f.path(g.edge(e).u, g.edge(e).v);
      c.set(idx(e));
      gens.push_back(std::move(c));
    }
  }

  struct Candidate {
    EdgeSet edges;
    std::uint32_t coeff;  // which fundamental cycles it combines
  };
  std::vector<Candidate> all;
  for (std::uint32_t mask = 1; mask < (1U << r); ++mask) {
    EdgeSet x(m);
    for (int j = 0; j < r; ++j)
      if ((mask >> j) & 1U) x ^= gens[idx(j)];
    all.push_back({std::move(x), mask});
  }
  std::sort(all.begin(), all.end(), [](const Candidate& a, const Candidate& b) { return a.edges < b.edges; });

  std::vector<int> ply(m, 0);
  std::vector<std::size_t> chosen;
  // span of chosen coefficient vectors as a bitmask over all 2^r vectors
  auto search = [&](auto&& self, std::size_t from, std::uint64_t span, int limit) -> bool {
    if (static_cast<int>(chosen.size()) == r) return true;
    const std::size_t need = idx(r) - chosen.size();
    for (std::size_t j = from; j + need <= all.size(); ++j) {
      const std::uint32_t c = all[j].coeff;
      if ((span >> c) & 1U) continue;
      bool ok = true;
      all[j].edges.for_each([&](int e) { ok = ok && ply[idx(e)] < limit; });
      if (!ok) continue;
      all[j].edges.for_each([&](int e) { ++ply[idx(e)]; });
      chosen.push_back(j);
      std::uint64_t grown = span;
      for (std::uint32_t x = 0; x < (1U << r); ++x)
        if ((span >> x) & 1U) grown |= std::uint64_t{1} << (x ^ c);
      if (self(self, j + 1, grown, limit)) return true;
      chosen.pop_back();
      all[j].edges.for_each([&](int e) { --ply[idx(e)]; });
    }
    return false;
  };

  for (int limit = 1;; ++limit) {
    if (search(search, 0, 1U, limit)) {
      result.bn = limit;
      for (std::size_t j : chosen) result.witness.add(all[j].edges, "oracle");
      return result;
    }
  }
}

}  // namespace plybasis
