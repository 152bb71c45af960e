#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "plybasis/graph.hpp"
#include "plybasis/path_decomposition.hpp"

namespace plybasis {

struct Instance {
  Graph graph;
  std::optional<PathDecomposition> decomposition;
  std::string descriptor;  // e.g. "random_interval n=20 t=3 seed=7"
};

Instance generate_grid(int rows, int cols);
Instance generate_complete(int n);
Instance generate_cycle(int n);

/// Connected graph with a width-t decomposition: vertices are placed on a
/// line, consecutive ones are always adjacent and any pair at distance <= t
/// is adjacent with probability 1/2. Labels are then shuffled. The emitted
/// decomposition uses the sliding windows of t+1 consecutive vertices.
Instance generate_random_interval(int n, int t, std::uint64_t seed);

/// Random connected cactus on n vertices: blocks are pendant edges or
/// cycles of length 3..6 hung from existing vertices.
Instance generate_cactus(int n, std::uint64_t seed);

enum class BlockKind { Cycle, K4, Wheel, Random };

/// A chain of `blocks` small blocks, consecutive ones sharing `glue` (1 or 2)
/// vertices. The decomposition has one bag per block, so every adhesion has
/// exactly `glue` vertices.
Instance generate_block_chain(int blocks, BlockKind kind, int glue, std::uint64_t seed);

/// A bag sequence where each bag keeps at most k vertices of its predecessor
/// and adds 1..3 fresh ones; every edge has a fresh endpoint in its bag.
Instance generate_random_adhesion(int bags, int k, std::uint64_t seed);

/// Uniform random graph on n vertices where each pair is an edge with
/// probability p (used by tests and benchmarks).
Graph generate_gnp(int n, double p, std::uint64_t seed);

/// Random forest on n vertices: each vertex after the first attaches to an
/// earlier one with probability `attach`.
Graph generate_random_forest(int n, double attach, std::uint64_t seed);

}  // namespace plybasis
