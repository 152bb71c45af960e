#include <doctest.h>

#include <algorithm>

#include "plybasis/errors.hpp"
#include "plybasis/generators.hpp"
#include "plybasis/path_decomposition.hpp"
#include "plybasis/rng.hpp"
#include "support/oracles.hpp"

using namespace plybasis;
using plybasis::testing::edges_of;
using plybasis::testing::graph_from;
using Bags = std::vector<std::vector<int>>;

namespace {

// Random interval model: each vertex owns an interval of bag indices and
// edges join overlapping intervals. Returns nullopt if the width exceeds t.
std::optional<Instance> random_interval_model(Rng& rng, int n, int t) {
  const int length = std::max(1, n / 2);
  std::vector<std::pair<int, int>> span(static_cast<std::size_t>(n));
  for (auto& [lo, hi] : span) {
    lo = static_cast<int>(rng.below(static_cast<std::uint64_t>(length)));
    hi = std::min(length - 1, lo + static_cast<int>(rng.below(3)));
  }
  Bags bags(static_cast<std::size_t>(length));
  for (int v = 0; v < n; ++v)
    for (int i = span[static_cast<std::size_t>(v)].first; i <= span[static_cast<std::size_t>(v)].second; ++i)
      bags[static_cast<std::size_t>(i)].push_back(v);
  for (const auto& b : bags)
    if (static_cast<int>(b.size()) > t + 1) return std::nullopt;
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const auto [a, b] = span[static_cast<std::size_t>(u)];
      const auto [c, d] = span[static_cast<std::size_t>(v)];
      if (std::max(a, c) <= std::min(b, d) && rng.bernoulli(0.6)) edges.push_back({u, v});
    }
  return Instance{Graph(n, std::move(edges)), PathDecomposition(bags), "interval model"};
}

}  // namespace

TEST_CASE("validate") {
  SUBCASE("P4") {
    const Graph p4 = make_path(4);
    const PathDecomposition d(Bags{{0, 1}, {1, 2}, {2, 3}});
    CHECK_FALSE(validate(p4, d).has_value());
    CHECK(d.width() == 1);
  }
  SUBCASE("non-contiguous vertex") {
    const Graph g = graph_from(3, {{0, 2}});
    const auto bad = validate(g, PathDecomposition(Bags{{0}, {1}, {0, 2}}));
    REQUIRE(bad.has_value());
    CHECK(bad->kind == Violation::Kind::NotContiguous);
    CHECK(bad->vertex == 0);
  }
  SUBCASE("K4 in one bag") {
    const PathDecomposition d(Bags{{0, 1, 2, 3}});
    CHECK_FALSE(validate(make_complete(4), d).has_value());
    CHECK(d.width() == 3);
  }
  SUBCASE("uncovered edge and out-of-range vertex") {
    const auto e = validate(make_path(3), PathDecomposition(Bags{{0, 1}, {2}}));
    REQUIRE(e.has_value());
    CHECK(e->kind == Violation::Kind::EdgeNotCovered);
    CHECK(e->edge == 1);
    const auto r = validate(make_path(3), PathDecomposition(Bags{{0, 1, 2, 5}}));
    REQUIRE(r.has_value());
    CHECK(r->kind == Violation::Kind::VertexOutOfRange);
  }
}

TEST_CASE("normalize") {
  SUBCASE("P3") {
    const Graph p3 = make_path(3);
    const PathDecomposition out = normalize(p3, PathDecomposition(Bags{{0, 1}, {1, 2}}));
    CHECK(out.bags() == Bags{{}, {0}, {0, 1}, {1, 2}});
    CHECK(out.is_normal());
  }
  SUBCASE("triangle") {
    const PathDecomposition out = normalize(make_cycle(3), PathDecomposition(Bags{{0, 1, 2}}));
    CHECK(out.bags() == Bags{{}, {0}, {0, 1}, {0, 1, 2}});
  }
  SUBCASE("idempotent") {
    const Graph g = make_grid(3, 3);
    const PathDecomposition once = normalize(g, exact_pathwidth(g).decomposition);
    CHECK(normalize(g, once) == once);
  }
  SUBCASE("invalid input") {
    CHECK_THROWS_AS(normalize(make_path(3), PathDecomposition(Bags{{0, 1}})), PreconditionError);
  }
  SUBCASE("random decompositions keep width and validity") {
    Rng rng(31);
    int done = 0;
    while (done < 500) {
      const int n = 1 + static_cast<int>(rng.below(40));
      const int t = static_cast<int>(rng.below(7));
      const auto inst = random_interval_model(rng, n, t);
      if (!inst) continue;
      ++done;
      const PathDecomposition out = normalize(inst->graph, *inst->decomposition);
      CHECK_FALSE(validate(inst->graph, out).has_value());
      CHECK(out.is_normal());
      CHECK(out.width() == inst->decomposition->width());
      CHECK(out.size() == static_cast<std::size_t>(n) + 1);
    }
  }
}

TEST_CASE("exact pathwidth") {
  CHECK(exact_pathwidth(make_complete(5)).width == 4);
  for (int n : {2, 5, 12}) CHECK(exact_pathwidth(make_path(n)).width == 1);
  CHECK(exact_pathwidth(Graph(4, {})).width == 0);
  CHECK(exact_pathwidth(Graph(0, {})).width == 0);
  SUBCASE("3x3 grid, cross-checked by trying every order") {
    const Graph g = make_grid(3, 3);
    const PathwidthResult r = exact_pathwidth(g);
    CHECK(r.width == 3);
    CHECK(plybasis::testing::pathwidth_by_permutations(g) == 3);
    CHECK_FALSE(validate(g, r.decomposition).has_value());
    CHECK(r.decomposition.width() == 3);
  }
  SUBCASE("size cap") {
    CHECK_THROWS_AS(exact_pathwidth(make_path(19)), SizeError);
    CHECK(exact_pathwidth(make_path(19), 19).width == 1);
    CHECK_THROWS_AS(exact_pathwidth(make_path(65), 100), SizeError);
  }
  SUBCASE("search agrees with the subset DP") {
    Rng rng(4);
    for (int trial = 0; trial < 25; ++trial) {
      const Graph g = generate_gnp(19 + static_cast<int>(rng.below(4)), 0.2, rng.next());
      const PathwidthResult r = exact_pathwidth(g, 40);
      CHECK(r.width == pathwidth_subset_dp(g));
      CHECK_FALSE(validate(g, r.decomposition).has_value());
      CHECK(r.decomposition.width() == r.width);
    }
  }
  SUBCASE("never above a generator's width") {
    for (std::uint64_t s = 1; s <= 40; ++s) {
      const int t = 1 + static_cast<int>(s % 4);
      const Instance inst = generate_random_interval(14 + static_cast<int>(s % 20), t, s);
      CHECK(exact_pathwidth(inst.graph, 40).width <= inst.decomposition->width());
    }
  }
}

TEST_CASE("bag graphs") {
  SUBCASE("triangle") {
    const Graph tri = make_cycle(3);
    const auto h = bag_graphs(tri, PathDecomposition(Bags{{0, 1}, {0, 1, 2}}));
    REQUIRE(h.size() == 2);
    CHECK(h[0] == edges_of(tri, {{0, 1}}));
    CHECK(h[1] == edges_of(tri, {{0, 2}, {1, 2}}));
  }
  SUBCASE("each edge in exactly one bag graph; normal steps add a star") {
    for (std::uint64_t s = 1; s <= 30; ++s) {
      const Instance inst = generate_random_interval(20, 3, s);
      const PathDecomposition d = normalize(inst.graph, *inst.decomposition);
      const auto h = bag_graphs(inst.graph, d);
      std::vector<int> hits(static_cast<std::size_t>(inst.graph.edge_count()), 0);
      for (const auto& x : h) x.for_each([&](int e) { ++hits[static_cast<std::size_t>(e)]; });
      CHECK(std::all_of(hits.begin(), hits.end(), [](int c) { return c == 1; }));
      for (std::size_t i = 1; i < d.size(); ++i) {
        std::vector<int> fresh;
        std::set_difference(d.bag(i).begin(), d.bag(i).end(), d.bag(i - 1).begin(), d.bag(i - 1).end(),
                            std::back_inserter(fresh));
        h[i].for_each([&](int e) {
          const Edge& ed = inst.graph.edge(e);
          CHECK((ed.u == fresh[0] || ed.v == fresh[0]));
        });
      }
    }
  }
}

TEST_CASE("adhesions") {
  CHECK(adhesions(PathDecomposition(Bags{{0, 1}, {1, 2}})) == Bags{{1}});
  CHECK(adhesions(PathDecomposition(Bags{{0, 1}, {2, 3}})) == Bags{{}});
  CHECK(adhesions(PathDecomposition(Bags{{0, 1}, {0, 1}})) == Bags{{0, 1}});
  CHECK(max_adhesion(PathDecomposition(Bags{{0, 1}})) == 0);
}

TEST_CASE("an adhesion separates the two sides") {
  Rng rng(12);
  int done = 0;
  while (done < 200) {
    const auto inst = random_interval_model(rng, 5 + static_cast<int>(rng.below(30)), 4);
    if (!inst) continue;
    ++done;
    const Graph& g = inst->graph;
    const PathDecomposition& d = *inst->decomposition;
    const auto a = adhesions(d);
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::vector<char> left(static_cast<std::size_t>(g.vertex_count()), 0), right = left, cut = left;
      for (int v : a[i]) cut[static_cast<std::size_t>(v)] = 1;
      for (std::size_t j = 0; j < d.size(); ++j)
        for (int v : d.bag(j)) (j <= i ? left : right)[static_cast<std::size_t>(v)] = 1;
      for (const Edge& e : g.edges()) {
        if (cut[static_cast<std::size_t>(e.u)] || cut[static_cast<std::size_t>(e.v)]) continue;
        const bool crosses = (left[static_cast<std::size_t>(e.u)] && !right[static_cast<std::size_t>(e.u)] &&
                              right[static_cast<std::size_t>(e.v)] && !left[static_cast<std::size_t>(e.v)]) ||
                             (left[static_cast<std::size_t>(e.v)] && !right[static_cast<std::size_t>(e.v)] &&
                              right[static_cast<std::size_t>(e.u)] && !left[static_cast<std::size_t>(e.u)]);
        CHECK_FALSE(crosses);
      }
    }
  }
}
