#include <doctest.h>

#include <algorithm>

#include "plybasis/builders.hpp"
#include "plybasis/errors.hpp"
#include "plybasis/forest.hpp"
#include "plybasis/generators.hpp"
#include "plybasis/rng.hpp"
#include "plybasis/verification.hpp"
#include "support/oracles.hpp"

using namespace plybasis;
using plybasis::testing::edges_of;
using plybasis::testing::graph_from;

namespace {

// star centre x=0 with leaves a=1, b=2, c=3
Graph star() { return graph_from(4, {{0, 1}, {0, 2}, {0, 3}}); }

std::vector<int> random_subset(int n, int size, Rng& rng) {
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  for (int i = 0; i < size; ++i) std::swap(all[static_cast<std::size_t>(i)], all[i + rng.below(static_cast<std::uint64_t>(n - i))]);
  all.resize(static_cast<std::size_t>(size));
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<char> mask(int n, const std::vector<int>& vs) {
  std::vector<char> m(static_cast<std::size_t>(n), 0);
  for (int v : vs) m[static_cast<std::size_t>(v)] = 1;
  return m;
}

}  // namespace

TEST_CASE("forest path") {
  const Graph p = make_path(4);
  const Forest f = spanning_forest(p);
  CHECK(forest_path(f, 0, 3) == p.all_edges());
  CHECK(f.path_edges(0, 3) == std::vector<int>{0, 1, 2});
  CHECK(f.path_edges(3, 0) == std::vector<int>{2, 1, 0});
  CHECK(forest_path(f, 2, 2).none());
  const Graph two = graph_from(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(forest_path(spanning_forest(two), 0, 3), DisconnectedError);
}

TEST_CASE("forest rejects cycles and edges leaving the vertex set") {
  const Graph c = make_cycle(3);
  CHECK_THROWS_AS(Forest(c, c.all_edges()), UsageError);
  CHECK_THROWS_AS(Forest(c, edges_of(c, {{0, 1}}), std::vector<char>{1, 0, 1}), UsageError);
}

TEST_CASE("steiner subforest") {
  SUBCASE("path ends") {
    const Graph p = make_path(4);
    const int s[] = {0, 3};
    CHECK(steiner_subforest(spanning_forest(p), s).edges() == p.all_edges());
  }
  SUBCASE("two leaves of a star") {
    const Graph g = star();
    const int s[] = {1, 2};
    const Forest out = steiner_subforest(spanning_forest(g), s);
    CHECK(out.edges() == edges_of(g, {{0, 1}, {0, 2}}));
    CHECK_FALSE(out.contains(3));
  }
  SUBCASE("single terminal") {
    const Graph g = star();
    const int s[] = {2};
    const Forest out = steiner_subforest(spanning_forest(g), s);
    CHECK(out.edge_count() == 0);
    CHECK(out.vertices() == std::vector<int>{2});
  }
}

TEST_CASE("skeleton") {
  SUBCASE("path ends become one labelled edge") {
    const Graph p = make_path(4);
    const int s[] = {0, 3};
    const Skeleton sk = skeleton(spanning_forest(p), s);
    CHECK(sk.vertices == std::vector<int>{0, 3});
    REQUIRE(sk.edges.size() == 1);
    CHECK(sk.edges[0].expansion == p.all_edges());
    CHECK(sk.edges[0].path.size() == 3);
  }
  SUBCASE("star on three leaves keeps its centre") {
    const Graph g = star();
    const int s[] = {1, 2, 3};
    const Skeleton sk = skeleton(spanning_forest(g), s);
    CHECK(sk.vertices == std::vector<int>{0, 1, 2, 3});
    CHECK(sk.edges.size() == 3);
  }
  SUBCASE("random forests: size bound, suppression and partition") {
    Rng rng(6);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 2 + static_cast<int>(rng.below(60));
      const Graph g = generate_random_forest(n, 0.9, rng.next());
      const Forest f = spanning_forest(g);
      const int size = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(n, 20) - 1)));
      const auto s = random_subset(n, size, rng);
      const Skeleton sk = skeleton(f, s);
      CHECK(static_cast<int>(sk.vertices.size()) <= 2 * size - 2);

      EdgeSet covered(static_cast<std::size_t>(g.edge_count()));
      std::vector<int> deg(static_cast<std::size_t>(n), 0);
      for (const SkeletonEdge& e : sk.edges) {
        EdgeSet overlap = e.expansion;
        overlap &= covered;
        CHECK(overlap.none());
        covered |= e.expansion;
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
      }
      CHECK(covered == steiner_subforest(f, s).edges());
      CHECK(covered == sk.steiner_edges);
      for (int v : sk.vertices)
        if (!std::binary_search(s.begin(), s.end(), v)) CHECK(deg[static_cast<std::size_t>(v)] >= 3);

      // the auditors' independent construction finds the same expansions
      auto mine = std::vector<std::vector<int>>{};
      for (const SkeletonEdge& e : sk.edges) {
        auto p = e.path;
        std::sort(p.begin(), p.end());
        mine.push_back(p);
      }
      auto theirs = audit_skeleton(g, f.edges(), s);
      for (auto& p : theirs) std::sort(p.begin(), p.end());
      std::sort(mine.begin(), mine.end());
      std::sort(theirs.begin(), theirs.end());
      CHECK(mine == theirs);
    }
  }
}

TEST_CASE("ply along a path") {
  const Graph p = make_path(4);
  const Forest f = spanning_forest(p);
  CHECK(ply_along(f, 0, 3, GeneratingSet(3)) == 0);
  GeneratingSet b(3);
  for (auto ids : {std::vector<int>{1}, {1}, {1, 2}, {0}, {2}}) b.add(EdgeSet::from_ids(3, ids));
  CHECK(b.ply_counts() == std::vector<int>{1, 3, 2});
  CHECK(ply_along(f, 0, 3, b) == 3);
  CHECK(ply_along(f, 2, 2, b) == 0);
  CHECK(ply_along(f, 2, 3, b) == 2);
  const Graph two = graph_from(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(ply_along(spanning_forest(two), 0, 2, GeneratingSet(2)), DisconnectedError);
}

TEST_CASE("lifting skeleton cycles") {
  // two a-c paths through different middle vertices: a=0, b=1, c=2, d=3
  const Graph c4 = make_cycle(4);
  const Forest t1(c4, edges_of(c4, {{0, 1}, {1, 2}}), mask(4, {0, 1, 2}));
  const Forest t2(c4, edges_of(c4, {{2, 3}, {3, 0}}), mask(4, {0, 2, 3}));
  const int a[] = {0, 2};
  const Skeleton s1 = skeleton(t1, a), s2 = skeleton(t2, a);
  const Skeleton* parts[] = {&s1, &s2};
  const LabelledGraph lg = skeleton_union(parts, 4);

  SUBCASE("the 2-cycle lifts to the union of both paths") {
    GeneratingSet whole(static_cast<std::size_t>(lg.graph.edge_count()));
    whole.add(lg.graph.all_edges());
    const GeneratingSet lifted = lift_skeleton_cycles(c4, lg, whole);
    REQUIRE(lifted.size() == 1);
    CHECK(lifted[0] == c4.all_edges());
  }
  SUBCASE("empty input") {
    CHECK(lift_skeleton_cycles(c4, lg, GeneratingSet(static_cast<std::size_t>(lg.graph.edge_count()))).empty());
  }
}

TEST_CASE("lifting keeps the rank on random two-tree instances") {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 6 + static_cast<int>(rng.below(30));
    const Graph g = generate_gnp(n, 0.25, rng.next());
    // split the edges in two random halves and take a spanning forest of each
    EdgeSet h1(static_cast<std::size_t>(g.edge_count())), h2 = h1;
    for (int e = 0; e < g.edge_count(); ++e) (rng.bernoulli(0.5) ? h1 : h2).set(static_cast<std::size_t>(e));
    std::vector<char> m1(static_cast<std::size_t>(n), 0), m2 = m1;
    h1.for_each([&](int e) { m1[static_cast<std::size_t>(g.edge(e).u)] = m1[static_cast<std::size_t>(g.edge(e).v)] = 1; });
    h2.for_each([&](int e) { m2[static_cast<std::size_t>(g.edge(e).u)] = m2[static_cast<std::size_t>(g.edge(e).v)] = 1; });
    const Forest f1 = spanning_forest(g, h1, m1), f2 = spanning_forest(g, h2, m2);

    std::vector<int> shared;
    for (int v = 0; v < n; ++v)
      if (m1[static_cast<std::size_t>(v)] && m2[static_cast<std::size_t>(v)]) shared.push_back(v);
    const Skeleton s1 = skeleton(f1, shared), s2 = skeleton(f2, shared);
    const Skeleton* parts[] = {&s1, &s2};
    const LabelledGraph lg = skeleton_union(parts, static_cast<std::size_t>(g.edge_count()));
    const GeneratingSet small = fundamental_basis(lg.graph, spanning_forest(lg.graph));
    const GeneratingSet lifted = lift_skeleton_cycles(g, lg, small);

    EdgeSet both = f1.edges();
    both |= f2.edges();
    CHECK(gf2_rank(small.elements()) == gf2_rank(lifted.elements()));
    CHECK(static_cast<int>(gf2_rank(lifted.elements())) == cycle_rank(g, both));
    for (const EdgeSet& c : lifted.elements()) CHECK(is_cycle(g, c));
  }
}

TEST_CASE("components of a union equal those of the union of spanning forests") {
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(40));
    const Graph g = generate_gnp(n, 0.08, rng.next());
    EdgeSet h1(static_cast<std::size_t>(g.edge_count())), h2 = h1;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (rng.bernoulli(0.6)) h1.set(static_cast<std::size_t>(e));
      if (rng.bernoulli(0.6)) h2.set(static_cast<std::size_t>(e));
    }
    const std::vector<char> all(static_cast<std::size_t>(n), 1);
    EdgeSet forests = spanning_forest(g, h1, all).edges();
    forests |= spanning_forest(g, h2, all).edges();
    EdgeSet graphs = h1;
    graphs |= h2;
    CHECK(components(g, forests) == components(g, graphs));
  }
}
