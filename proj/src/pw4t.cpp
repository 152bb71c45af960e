// Apex basis, incremental step and the pathwidth builder.

#include <algorithm>
#include <string>

#include "plybasis/builders.hpp"
#include "plybasis/errors.hpp"

namespace plybasis {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

}  // namespace

GeneratingSet apex_forest_basis(const Forest& f_minus, int v, std::span<const int> neighbors) {
  const Graph& g = f_minus.graph();
  if (!g.valid_vertex(v)) throw UsageError("apex vertex out of range");
  if (f_minus.degree(v) != 0) throw UsageError("apex vertex already has forest edges");

  std::vector<int> rank(idx(g.vertex_count()), -1);
  for (std::size_t i = 0; i < f_minus.preorder().size(); ++i) rank[idx(f_minus.preorder()[i])] = static_cast<int>(i);

  std::vector<int> sorted(neighbors.begin(), neighbors.end());
  for (int w : sorted) {
    if (w == v || !g.valid_vertex(w) || !f_minus.contains(w)) {
      throw UsageError("apex neighbour " + std::to_string(w) + " is not a forest vertex");
    }
    if (!g.edge_id(v, w)) throw UsageError("apex edge " + std::to_string(v) + "-" + std::to_string(w) + " missing");
  }
  // preorder ranks group each tree contiguously, so one sort orders both
  std::sort(sorted.begin(), sorted.end(), [&](int a, int b) { return rank[idx(a)] < rank[idx(b)]; });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  GeneratingSet delta(idx(g.edge_count()));
  for (std::size_t j = 0; j + 1 < sorted.size(); ++j) {
    const int a = sorted[j];
    const int b = sorted[j + 1];
    if (f_minus.component(a) != f_minus.component(b)) continue;
    EdgeSet cycle = f_minus.path(a, b);
    cycle.set(idx(*g.edge_id(v, a)));
    cycle.set(idx(*g.edge_id(v, b)));
    delta.add(std::move(cycle), "apex");
  }
  return delta;
}

GeneratingSet incremental_step(const EdgeSet& g_minus_edges, const Forest& f_minus, const GeneratingSet& b_minus, int v,
                               std::span<const int> neighbors) {
  const Graph& g = f_minus.graph();
  if (!is_generating_set(g, g_minus_edges, b_minus)) {
    throw PreconditionError("incremental_step: B^- does not generate the cycle space of G - v");
  }
  GeneratingSet out = b_minus;
  out.append(apex_forest_basis(f_minus, v, neighbors));

  EdgeSet whole = g_minus_edges;
  for (int w : neighbors) whole.set(idx(*g.edge_id(v, w)));
  if (!is_generating_set(g, whole, out)) throw std::logic_error("incremental_step: B^- ∪ Δ fails to generate");
  return out;
}

BuildResult build_pw4t(const Graph& g, const PathDecomposition& d) {
  if (auto bad = validate(g, d)) throw PreconditionError("build_pw4t: invalid decomposition: " + bad->message);
  if (!d.is_normal()) throw PreconditionError("build_pw4t: decomposition is not normal");

  const std::size_t m = idx(g.edge_count());
  BuildResult result{GeneratingSet(m), EdgeSet(m), {}};
  auto& basis = result.basis;
  auto& trace = result.trace;
  trace.birth_time.assign(m, -1);

  std::vector<char> introduced(idx(g.vertex_count()), 0);
  EdgeSet forest(m);
  trace.steps.push_back({0, -1, 0, 0, 0, 0, forest, {}, forest});

  for (std::size_t i = 1; i < d.size(); ++i) {
    std::vector<int> fresh;
    std::set_difference(d.bag(i).begin(), d.bag(i).end(), d.bag(i - 1).begin(), d.bag(i - 1).end(),
                        std::back_inserter(fresh));
    const int v = fresh.front();

    std::vector<int> neighbors;
    for (const auto& [w, e] : g.incident(v)) {
      if (!introduced[idx(w)]) continue;
      neighbors.push_back(w);
      trace.birth_time[idx(e)] = static_cast<int>(i);
    }

    TraceStep step;
    step.bag = static_cast<int>(i);
    step.vertex = v;
    step.lambda_begin = step.delta_begin = basis.size();
    {
      const Forest f_minus(g, forest, introduced);
      const GeneratingSet delta = apex_forest_basis(f_minus, v, neighbors);
      step.delta_ply = delta.max_ply();
      for (std::size_t j = 0; j < delta.size(); ++j) basis.add(delta[j], "pw4t:" + std::to_string(i));
    }
    step.end = basis.size();
    introduced[idx(v)] = 1;

    EdgeSet plus = forest;
    for (int w : neighbors) plus.set(idx(*g.edge_id(v, w)));
    step.forest_plus = plus;
    while (true) {
      const EdgeSet candidates = cycle_edges(g, plus);
      const int first = candidates.first();
      if (first == -1) break;
      int pick = first;
      candidates.for_each([&](int e) {
        if (basis.ply(e) > basis.ply(pick)) pick = e;
      });
      step.removed.push_back({pick, basis.ply(pick)});
      plus.reset(idx(pick));
    }
    forest = plus;
    step.forest = forest;
    trace.d_max = std::max(trace.d_max, step.delta_ply);
    trace.steps.push_back(std::move(step));
  }

  // vertices outside every bag are isolated; their forest is empty
  result.forest = forest;
  return result;
}

}  // namespace plybasis
