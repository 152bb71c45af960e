#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace plybasis {

/// A subset of a graph's edges, stored as a GF(2) vector of length m.
///
/// This is the single representation used for cycles, paths, forests,
/// Eulerian subgraphs and elements of the cycle space. The vertex set of
/// the subgraph is implied by the endpoints of its edges.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  static EdgeSet from_ids(std::size_t universe, std::span<const int> ids);

  std::size_t universe_size() const noexcept { return universe_; }

  bool test(std::size_t e) const noexcept { return (words_[e >> 6] >> (e & 63)) & 1U; }
  void set(std::size_t e) noexcept { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void reset(std::size_t e) noexcept { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }
  void flip(std::size_t e) noexcept { words_[e >> 6] ^= std::uint64_t{1} << (e & 63); }

  std::size_t count() const noexcept;
  bool none() const noexcept;
  bool any() const noexcept { return !none(); }

  /// Index of the lowest set edge, or -1 when empty.
  int first() const noexcept { return next_from(0); }
  /// Lowest set edge with index >= from, or -1.
  int next_from(std::size_t from) const noexcept;

  bool is_subset_of(const EdgeSet& other) const;

  // These require equal universes; mismatches throw UsageError.
  EdgeSet& operator^=(const EdgeSet& other);
  EdgeSet& operator|=(const EdgeSet& other);
  EdgeSet& operator&=(const EdgeSet& other);
  EdgeSet& subtract(const EdgeSet& other);

  /// XOR that skips words below `from_word`; both operands must be zero there.
  void xor_tail(const EdgeSet& other, std::size_t from_word) noexcept;

  std::vector<int> ids() const;

  template <typename F>
  void for_each(F&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        fn(static_cast<int>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const EdgeSet& a, const EdgeSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  friend bool operator<(const EdgeSet& a, const EdgeSet& b);  // lexicographic by edge ids

 private:
  void require_same_universe(const EdgeSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Edge-wise XOR; throws UsageError when the parent graphs differ in size.
EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b);

struct EdgeSetHash {
  std::size_t operator()(const EdgeSet& s) const noexcept;
};

}  // namespace plybasis
