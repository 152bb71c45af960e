// Merging, the two-trees basis and the bounded-adhesion builder.

#include <algorithm>
#include <string>

#include "plybasis/builders.hpp"
#include "plybasis/errors.hpp"

namespace plybasis {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

bool all_within(const GeneratingSet& set, const EdgeSet& edges) {
  return std::all_of(set.elements().begin(), set.elements().end(),
                     [&](const EdgeSet& x) { return x.is_subset_of(edges); });
}

// Smallest-birth cycle edge, lowest id on ties; -1 when acyclic.
int min_birth_cycle_edge(const Graph& g, const EdgeSet& edges, const std::vector<int>& birth) {
  int pick = -1;
  cycle_edges(g, edges).for_each([&](int e) {
    if (pick == -1 || birth[idx(e)] < birth[idx(pick)]) pick = e;
  });
  return pick;
}

}  // namespace

GeneratingSet merge_bases(const Graph& g, const SubgraphBundle& first, const SubgraphBundle& second,
                          const GeneratingSet& delta) {
  EdgeSet forests = first.forest->edges();
  forests |= second.forest->edges();
  if (!all_within(delta, forests) || gf2_rank(delta.elements()) != delta.size() ||
      !is_generating_set(g, forests, delta)) {
    throw PreconditionError("merge_bases: delta is not a cycle basis of F1 ∪ F2");
  }
  GeneratingSet out = *first.basis;
  out.append(*second.basis);
  out.append(delta);

  EdgeSet whole = first.edges;
  whole |= second.edges;
  if (!is_generating_set(g, whole, out)) throw std::logic_error("merge_bases: union fails to generate H1 ∪ H2");
  return out;
}

TwoTreesResult two_trees_basis(const Forest& t1, const Forest& t2, std::uint64_t seed) {
  const Graph& g = t1.graph();
  if (&t2.graph() != &g) throw UsageError("two_trees_basis: forests over different graphs");
  const std::size_t m = idx(g.edge_count());

  TwoTreesResult out{GeneratingSet(m), 0, 0, 0};
  std::vector<int> shared;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (t1.contains(v) && t2.contains(v)) shared.push_back(v);
  out.shared = static_cast<int>(shared.size());
  if (shared.size() <= 1) return out;

  const Skeleton s1 = skeleton(t1, shared);
  const Skeleton s2 = skeleton(t2, shared);
  const Skeleton* parts[] = {&s1, &s2};
  const LabelledGraph small = skeleton_union(parts, m);
  out.skeleton_vertices = small.graph.vertex_count();

  GeneratingSet cycles = fh_generating_set(small.graph, seed);
  if (!is_generating_set(small.graph, cycles)) cycles = fundamental_basis(small.graph, spanning_forest(small.graph));

  GeneratingSet lifted = independent_subset(lift_skeleton_cycles(g, small, cycles));
  EdgeSet both = t1.edges();
  both |= t2.edges();
  if (static_cast<int>(lifted.size()) != cycle_rank(g, both) || !all_within(lifted, both)) {
    throw std::logic_error("two_trees_basis: lifted cycles do not span the union");
  }
  for (std::size_t i = 0; i < lifted.size(); ++i) out.delta.add(lifted[i], "two-trees");
  out.ply = out.delta.max_ply();
  return out;
}

BuildResult build_adhesion(const Graph& g, const PathDecomposition& d, int k, int b,
                           const BagBasisProvider& provider) {
  if (auto bad = validate(g, d)) throw PreconditionError("build_adhesion: invalid decomposition: " + bad->message);
  if (k < 0 || b < 0) throw UsageError("build_adhesion: k and b must be nonnegative");
  if (max_adhesion(d) > k) {
    throw PreconditionError("build_adhesion: adhesion " + std::to_string(max_adhesion(d)) + " exceeds k = " +
                            std::to_string(k));
  }

  const std::size_t m = idx(g.edge_count());
  const int n = g.vertex_count();
  const std::vector<EdgeSet> h = bag_graphs(g, d);

  BuildResult result{GeneratingSet(m), EdgeSet(m), {}};
  auto& trace = result.trace;
  trace.birth_time.assign(m, -1);
  for (std::size_t i = 0; i < h.size(); ++i) h[i].for_each([&](int e) { trace.birth_time[idx(e)] = static_cast<int>(i); });

  std::vector<GeneratingSet> lambda;
  lambda.reserve(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    GeneratingSet part = provider(g, h[i]);
    if (part.edge_count() != m) throw UsageError("bag basis provider returned a set over the wrong graph");
    if (!all_within(part, h[i]) || !is_generating_set(g, h[i], part)) {
      throw PreconditionError("build_adhesion: provider basis does not generate H_" + std::to_string(i));
    }
    if (part.max_ply() > b) {
      throw PreconditionError("build_adhesion: provider basis of H_" + std::to_string(i) + " has ply " +
                              std::to_string(part.max_ply()) + " > b = " + std::to_string(b));
    }
    lambda.push_back(std::move(part));
  }

  auto add_lambda = [&](std::size_t i) {
    for (std::size_t j = 0; j < lambda[i].size(); ++j) result.basis.add(lambda[i][j], "lambda:" + std::to_string(i));
  };

  if (k <= 1) {
    // cut vertices separate the bags, so every cycle sits inside one H_i
    for (std::size_t i = 0; i < h.size(); ++i) {
      TraceStep step;
      step.bag = static_cast<int>(i);
      step.lambda_begin = result.basis.size();
      add_lambda(i);
      step.delta_begin = step.end = result.basis.size();
      trace.steps.push_back(std::move(step));
    }
    result.forest = spanning_forest(g).edges();
    if (!is_generating_set(g, result.basis)) throw std::logic_error("build_adhesion: k <= 1 union fails to generate");
    return result;
  }

  std::vector<char> seen(idx(n), 0);
  EdgeSet forest(m);
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::vector<char> bag_members(idx(n), 0);
    for (int v : d.bag(i)) bag_members[idx(v)] = 1;
    const Forest fi = spanning_forest(g, h[i], bag_members);

    TraceStep step;
    step.bag = static_cast<int>(i);
    step.lambda_begin = result.basis.size();
    add_lambda(i);
    step.delta_begin = result.basis.size();
    if (i > 0) {
      const Forest f_minus(g, forest, seen);
      TwoTreesResult two = two_trees_basis(f_minus, fi);
      step.delta_ply = two.ply;
      for (std::size_t j = 0; j < two.delta.size(); ++j) result.basis.add(two.delta[j], "delta:" + std::to_string(i));
    }
    step.end = result.basis.size();

    for (int v : d.bag(i)) seen[idx(v)] = 1;
    EdgeSet plus = forest;
    plus |= fi.edges();
    step.forest_plus = plus;
    for (int e; (e = min_birth_cycle_edge(g, plus, trace.birth_time)) != -1;) {
      step.removed.push_back({e, trace.birth_time[idx(e)]});
      plus.reset(idx(e));
    }
    forest = plus;
    step.forest = forest;
    trace.d_max = std::max(trace.d_max, step.delta_ply);
    trace.steps.push_back(std::move(step));
  }

  // isolated vertices outside every bag carry no edges, so the forest still spans
  result.forest = forest;
  if (!is_generating_set(g, result.basis)) throw std::logic_error("build_adhesion: result fails to generate");
  return result;
}

}  // namespace plybasis
