#include "plybasis/edge_set.hpp"

#include <algorithm>
#include <string>

#include "plybasis/errors.hpp"

namespace plybasis {

EdgeSet EdgeSet::from_ids(std::size_t universe, std::span<const int> ids) {
  EdgeSet s(universe);
  for (int e : ids) {
    if (e < 0 || static_cast<std::size_t>(e) >= universe) {
      throw UsageError("edge id " + std::to_string(e) + " outside universe of size " +
                       std::to_string(universe));
    }
    s.set(static_cast<std::size_t>(e));
  }
  return s;
}

std::size_t EdgeSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool EdgeSet::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

int EdgeSet::next_from(std::size_t from) const noexcept {
  if (from >= universe_) return -1;
  std::size_t w = from >> 6;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (bits != 0) return static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    if (++w == words_.size()) return -1;
    bits = words_[w];
  }
}

bool EdgeSet::is_subset_of(const EdgeSet& other) const {
  require_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

EdgeSet& EdgeSet::operator^=(const EdgeSet& other) {
  require_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& other) {
  require_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

EdgeSet& EdgeSet::operator&=(const EdgeSet& other) {
  require_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

EdgeSet& EdgeSet::subtract(const EdgeSet& other) {
  require_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

void EdgeSet::xor_tail(const EdgeSet& other, std::size_t from_word) noexcept {
  for (std::size_t w = from_word; w < words_.size(); ++w) words_[w] ^= other.words_[w];
}

std::vector<int> EdgeSet::ids() const {
  std::vector<int> out;
  out.reserve(count());
  for_each([&](int e) { out.push_back(e); });
  return out;
}

bool operator<(const EdgeSet& a, const EdgeSet& b) {
  if (a.universe_ != b.universe_) return a.universe_ < b.universe_;
  const auto ia = a.ids();
  const auto ib = b.ids();
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

void EdgeSet::require_same_universe(const EdgeSet& other) const {
  if (universe_ != other.universe_) {
    throw UsageError("edge sets over different graphs (" + std::to_string(universe_) + " vs " +
                     std::to_string(other.universe_) + " edges)");
  }
}

EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out = a;
  out ^= b;
  return out;
}

std::size_t EdgeSetHash::operator()(const EdgeSet& s) const noexcept {
  std::size_t h = std::hash<std::size_t>{}(s.universe_size());
  for (auto w : s.words()) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace plybasis
