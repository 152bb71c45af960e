#include <doctest.h>

#include "plybasis/builders.hpp"
#include "plybasis/errors.hpp"
#include "plybasis/generators.hpp"
#include "plybasis/providers.hpp"
#include "plybasis/rng.hpp"
#include "plybasis/verification.hpp"
#include "support/oracles.hpp"

using namespace plybasis;
using plybasis::testing::edges_of;
using plybasis::testing::graph_from;

namespace {

Graph k33() {
  std::vector<Edge> e;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) e.push_back({a, b});
  return Graph(6, e);
}

}  // namespace

TEST_CASE("verify_generating") {
  CHECK(verify_generating(make_path(5), GeneratingSet(4)).pass);
  const Graph k4 = make_complete(4);
  GeneratingSet two(6);
  two.add(edges_of(k4, {{0, 1}, {1, 2}, {2, 0}}));
  two.add(edges_of(k4, {{0, 1}, {1, 3}, {3, 0}}));
  const Check c = verify_generating(k4, two);
  CHECK_FALSE(c.pass);
  CHECK(c.observed == 2);
  CHECK(c.bound == 3);
  GeneratingSet odd(6);
  odd.add(edges_of(k4, {{0, 1}, {1, 2}}));
  CHECK_FALSE(verify_generating(k4, odd).pass);
}

TEST_CASE("verify_ply_bound") {
  CHECK(verify_ply_bound(GeneratingSet(3), 0).pass);
  const Graph d = graph_from(4, {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {3, 0}});
  GeneratingSet b(5);
  b.add(edges_of(d, {{0, 1}, {1, 2}, {2, 0}}));
  b.add(edges_of(d, {{0, 1}, {1, 3}, {3, 0}}));
  const Check c = verify_ply_bound(b, 1);
  CHECK_FALSE(c.pass);
  CHECK(c.observed == 2);
  CHECK(verify_ply_bound(b, 2).pass);
}

TEST_CASE("brute-force basis number") {
  CHECK(brute_force_min_ply(make_path(6)).bn == 0);
  CHECK(brute_force_min_ply(graph_from(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})).bn == 1);
  const MinPlyResult k4 = brute_force_min_ply(make_complete(4));
  CHECK(k4.bn == 2);
  CHECK(k4.witness.size() == 3);
  CHECK(is_generating_set(make_complete(4), k4.witness));
  CHECK(k4.witness.max_ply() == 2);
  CHECK(brute_force_min_ply(k33()).bn == 3);
  CHECK(brute_force_min_ply(make_grid(2, 3)).bn == 2);  // every pair of its three cycles overlaps
  CHECK_THROWS_AS(brute_force_min_ply(make_complete(5)), SizeError);
  CHECK(brute_force_min_ply(make_complete(5), 6).bn >= 3);
}

TEST_CASE("the oracle is never beaten and respects 4 pw") {
  Rng rng(5);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = generate_gnp(3 + static_cast<int>(rng.below(10)), 0.3, rng.next());
    if (cycle_rank(g) > 5) continue;
    ++checked;
    const int bn = brute_force_min_ply(g).bn;
    CHECK(bn <= maxply_generating_set(g, MaxPlyMode::Deterministic).max_ply());
    CHECK(bn <= fh_generating_set(g, 3).max_ply());
    const PathwidthResult pw = exact_pathwidth(g);
    CHECK(bn <= build_pw4t(g, normalize(g, pw.decomposition)).basis.max_ply());
    CHECK(bn <= 4 * pw.width);
  }
  CHECK(checked > 100);
}

TEST_CASE("claim audits") {
  SUBCASE("an empty basis passes the technical audit") {
    const Graph p = make_path(8);
    const PathDecomposition d = normalize(p, exact_pathwidth(p).decomposition);
    const BuildResult r = build_pw4t(p, d);
    CHECK(claim_technical_audit(p, d, r.basis, r.trace, 1).pass);
  }
  SUBCASE("a too-small width is caught") {
    const Graph g = make_complete(6);
    const PathDecomposition d = normalize(g, exact_pathwidth(g).decomposition);
    const BuildResult r = build_pw4t(g, d);
    CHECK(claim_technical_audit(g, d, r.basis, r.trace, 5).pass);
    CHECK_FALSE(claim_technical_audit(g, d, r.basis, r.trace, 1).pass);
  }
  SUBCASE("reruns agree") {
    const Instance inst = generate_random_adhesion(7, 3, 4);
    const auto provider = make_provider("best");
    const BuildResult r = build_adhesion(inst.graph, *inst.decomposition, 3, 3, provider);
    const Check a = claim_iold_audit(inst.graph, *inst.decomposition, r.basis, r.trace, 3, 3);
    const Check b = claim_iold_audit(inst.graph, *inst.decomposition, r.basis, r.trace, 3, 3);
    CHECK(a.pass);
    CHECK(a.detail == b.detail);
    CHECK(a.rows == b.rows);
  }
  SUBCASE("bag graphs without edges leave z vacuous") {
    // the middle bag adds an isolated vertex, so nothing is born there
    const Graph g = graph_from(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
    const PathDecomposition d(std::vector<std::vector<int>>{{0, 1, 2}, {2}, {2, 3, 4}});
    const BuildResult r = build_adhesion(g, d, 2, 1, make_provider("exact"));
    const Check c = claim_iold_audit(g, d, r.basis, r.trace, 2, 1);
    CHECK(c.pass);
  }
}

TEST_CASE("removal audit catches a tampered trace") {
  const Graph g = make_grid(3, 4);
  const PathDecomposition d = normalize(g, exact_pathwidth(g).decomposition);
  BuildResult r = build_pw4t(g, d);
  CHECK(removal_audit(g, d, r.basis, r.trace, RemovalRule::MaxPly).pass);
  for (TraceStep& step : r.trace.steps) {
    if (step.removed.empty()) continue;
    step.removed.front().key += 1;
    break;
  }
  CHECK_FALSE(removal_audit(g, d, r.basis, r.trace, RemovalRule::MaxPly).pass);
}
