#pragma once

#include <string>
#include <vector>

#include "plybasis/builders.hpp"
#include "plybasis/cycle_space.hpp"
#include "plybasis/graph.hpp"
#include "plybasis/path_decomposition.hpp"

namespace plybasis {

/// One audited property. For table-style audits `observed` is the number
/// of violating rows, `bound` is 0 and `rows` counts the rows examined.
struct Check {
  std::string name;
  double bound = 0;
  double observed = 0;
  bool pass = true;
  std::string detail;
  long rows = 0;
};

struct AuditReport {
  std::string instance;
  std::vector<Check> checks;

  bool pass() const;
  void add(Check c) { checks.push_back(std::move(c)); }
};

/// Every element Eulerian in g and the rank equals the cycle rank of g.
/// Recomputed with local elimination, not the cycle_space kernel.
Check verify_generating(const Graph& g, const GeneratingSet& basis);

/// Ply recomputed from the elements; pass iff the maximum is <= bound.
Check verify_ply_bound(const GeneratingSet& basis, int bound);

/// Expansion paths of the skeleton of `forest` on `terminals`, derived from
/// pairwise tree paths rather than leaf pruning. Each inner vector lists
/// host edge ids of one skeleton edge. Exposed for cross-checks.
std::vector<std::vector<int>> audit_skeleton(const Graph& g, const EdgeSet& forest, const std::vector<int>& terminals);

/// For every trace step and every c in 0..2t-1: the number of skeleton edges
/// of F on the step's bag whose path ply is >= 2c+1 is at most 2t-c-1.
Check claim_technical_audit(const Graph& g, const PathDecomposition& d, const GeneratingSet& basis,
                            const BuildTrace& trace, int t);

/// For every prefix step s and every i <= s: the number of i-old skeleton
/// edges of F_s on A_i is at most 2k-2-z_i, where z_i is the excess of the
/// largest ply among edges born at i over b, divided by the largest Δ ply
/// (at least 1). A_i is B_i ∩ B_{i+1}; the last bag uses the empty set.
Check claim_iold_audit(const Graph& g, const PathDecomposition& d, const GeneratingSet& basis, const BuildTrace& trace,
                       int k, int b);

enum class RemovalRule { MaxPly, MinBirth };

/// Replays every removal: each removed edge was a cycle edge at the time,
/// it optimized the rule (lowest id on ties), the final forest is acyclic
/// and the component partition never changed.
Check removal_audit(const Graph& g, const PathDecomposition& d, const GeneratingSet& basis, const BuildTrace& trace,
                    RemovalRule rule);

struct MinPlyResult {
  int bn = 0;
  GeneratingSet witness;
};

inline constexpr int kDefaultOracleRankCap = 5;

/// Exact basis number: enumerates every nonzero element of the cycle space
/// and searches bases in lexicographic order with ply pruning.
/// Throws SizeError when cycle_rank(g) exceeds `cap`.
MinPlyResult brute_force_min_ply(const Graph& g, int cap = kDefaultOracleRankCap);

}  // namespace plybasis
