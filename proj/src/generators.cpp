#include "plybasis/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "plybasis/errors.hpp"
#include "plybasis/rng.hpp"

namespace plybasis {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

void shuffle(std::vector<int>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

// Collects edges, skipping repeats, so blocks can be glued freely.
class EdgeCollector {
 public:
  void add(int u, int v) {
    if (u != v && seen_.insert(std::minmax(u, v)).second) edges_.push_back({u, v});
  }
  std::vector<Edge> take() { return std::move(edges_); }

 private:
  std::set<std::pair<int, int>> seen_;
  std::vector<Edge> edges_;
};

void require_positive(int value, const char* what) {
  if (value < 1) throw UsageError(std::string(what) + " must be positive");
}

}  // namespace

Instance generate_grid(int rows, int cols) {
  return {make_grid(rows, cols), std::nullopt, "grid " + std::to_string(rows) + "x" + std::to_string(cols)};
}

Instance generate_complete(int n) {
  require_positive(n, "n");
  return {make_complete(n), std::nullopt, "complete n=" + std::to_string(n)};
}

Instance generate_cycle(int n) {
  if (n < 3) throw UsageError("a cycle needs at least 3 vertices");
  return {make_cycle(n), std::nullopt, "cycle n=" + std::to_string(n)};
}

Instance generate_random_interval(int n, int t, std::uint64_t seed) {
  require_positive(n, "n");
  if (t < 0) throw UsageError("t must be nonnegative");
  Rng rng(seed);
  std::vector<int> label(idx(n));
  std::iota(label.begin(), label.end(), 0);
  shuffle(label, rng);

  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    for (int w = v + 1; w <= std::min(v + t, n - 1); ++w) {
      if (w == v + 1 || rng.bernoulli(0.5)) edges.push_back({label[idx(v)], label[idx(w)]});
    }
  }
  std::vector<std::vector<int>> bags;
  const int window = std::min(t + 1, n);
  for (int start = 0; start + window <= n; ++start) {
    std::vector<int> bag;
    for (int v = start; v < start + window; ++v) bag.push_back(label[idx(v)]);
    bags.push_back(std::move(bag));
  }
  return {Graph(n, std::move(edges)), PathDecomposition(std::move(bags)),
          "random_interval n=" + std::to_string(n) + " t=" + std::to_string(t) + " seed=" + std::to_string(seed)};
}

Instance generate_cactus(int n, std::uint64_t seed) {
  require_positive(n, "n");
  Rng rng(seed);
  std::vector<Edge> edges;
  int size = 1;
  while (size < n) {
    const int anchor = rng.uniform_int(0, size - 1);
    const int length = rng.bernoulli(0.3) ? 2 : rng.uniform_int(3, 6);
    const int fresh = std::min(length - 1, n - size);
    int prev = anchor;
    for (int j = 0; j < fresh; ++j) {
      edges.push_back({prev, size});
      prev = size++;
    }
    if (fresh >= 2) edges.push_back({prev, anchor});
  }
  return {Graph(n, std::move(edges)), std::nullopt, "cactus n=" + std::to_string(n) + " seed=" + std::to_string(seed)};
}

Instance generate_block_chain(int blocks, BlockKind kind, int glue, std::uint64_t seed) {
  require_positive(blocks, "blocks");
  if (glue != 1 && glue != 2) throw UsageError("glue must be 1 or 2");
  Rng rng(seed);
  EdgeCollector edges;
  std::vector<std::vector<int>> bags;
  std::vector<int> shared;
  int next = 0;
  for (int b = 0; b < blocks; ++b) {
    std::vector<int> verts = shared;
    const int size = kind == BlockKind::K4 ? 4 : rng.uniform_int(std::max(3, 2 * glue), 6);
    while (static_cast<int>(verts.size()) < size) verts.push_back(next++);
    const int s = static_cast<int>(verts.size());
    switch (kind) {
      case BlockKind::Cycle:
        for (int j = 0; j < s; ++j) edges.add(verts[idx(j)], verts[idx((j + 1) % s)]);
        break;
      case BlockKind::K4:
        for (int a = 0; a < s; ++a)
          for (int c = a + 1; c < s; ++c) edges.add(verts[idx(a)], verts[idx(c)]);
        break;
      case BlockKind::Wheel:
        for (int j = 1; j < s; ++j) {
          edges.add(verts[0], verts[idx(j)]);
          edges.add(verts[idx(j)], verts[idx(j == s - 1 ? 1 : j + 1)]);
        }
        break;
      case BlockKind::Random:
        // a Hamiltonian cycle keeps the block 2-connected, chords are random
        for (int j = 0; j < s; ++j) edges.add(verts[idx(j)], verts[idx((j + 1) % s)]);
        for (int a = 0; a < s; ++a)
          for (int c = a + 2; c < s; ++c)
            if (rng.bernoulli(0.35)) edges.add(verts[idx(a)], verts[idx(c)]);
        break;
    }
    std::vector<int> bag = verts;
    std::sort(bag.begin(), bag.end());
    bags.push_back(bag);
    // glue on fresh vertices of this block where possible so that adhesions stay disjoint
    std::vector<int> pool(verts.begin() + static_cast<long>(shared.size()), verts.end());
    shuffle(pool, rng);
    shared.assign(pool.begin(), pool.begin() + glue);
  }
  static const char* names[] = {"cycle", "k4", "wheel", "random"};
  return {Graph(next, edges.take()), PathDecomposition(std::move(bags)),
          "block_chain blocks=" + std::to_string(blocks) + " kind=" + names[static_cast<int>(kind)] +
              " glue=" + std::to_string(glue) + " seed=" + std::to_string(seed)};
}

Instance generate_random_adhesion(int bags, int k, std::uint64_t seed) {
  require_positive(bags, "bags");
  if (k < 0) throw UsageError("k must be nonnegative");
  Rng rng(seed);
  EdgeCollector edges;
  std::vector<std::vector<int>> out;
  std::vector<int> prev;
  int next = 0;
  for (int b = 0; b < bags; ++b) {
    std::vector<int> kept = prev;
    shuffle(kept, rng);
    const int keep = rng.uniform_int(0, std::min<int>(k, static_cast<int>(kept.size())));
    kept.resize(idx(keep));
    std::vector<int> fresh;
    for (int j = rng.uniform_int(1, 3); j > 0; --j) fresh.push_back(next++);

    std::vector<int> bag = kept;
    bag.insert(bag.end(), fresh.begin(), fresh.end());
    for (int f : fresh) {
      for (int w : bag) {
        if (w == f) continue;
        if (rng.bernoulli(0.55)) edges.add(f, w);
      }
    }
    std::sort(bag.begin(), bag.end());
    out.push_back(bag);
    prev = std::move(bag);
  }
  return {Graph(next, edges.take()), PathDecomposition(std::move(out)),
          "random_adhesion bags=" + std::to_string(bags) + " k=" + std::to_string(k) + " seed=" + std::to_string(seed)};
}

Graph generate_gnp(int n, double p, std::uint64_t seed) {
  if (n < 0) throw UsageError("n must be nonnegative");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph generate_random_forest(int n, double attach, std::uint64_t seed) {
  if (n < 0) throw UsageError("n must be nonnegative");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v)
    if (rng.bernoulli(attach)) edges.push_back({static_cast<int>(rng.below(static_cast<std::uint64_t>(v))), v});
  return Graph(n, std::move(edges));
}

}  // namespace plybasis
