#pragma once

#include <cstdint>
#include <vector>

#include "rog/rng.hpp"

namespace rog {

// An ordering of items 1..m, validated to be a bijection.
class Permutation {
 public:
  explicit Permutation(std::vector<int> order);

  int item_count() const { return static_cast<int>(order_.size()); }
  int item_at(int position) const { return order_[static_cast<std::size_t>(position)]; }  // 0-based
  const std::vector<int>& order() const { return order_; }

  // positions[item] = 0-based position of the item.
  std::vector<int> positions() const;

  static Permutation identity(int m);

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.order_ == b.order_; }

 private:
  std::vector<int> order_;
};

// Uniform over all m! orderings; deterministic given the generator state.
Permutation random_permutation(int m, Rng& rng);
Permutation random_permutation(int m, std::uint64_t seed);

std::uint64_t factorial(int m);  // throws on overflow past 20!

// index-th permutation of 1..m in lexicographic order, index in [0, m!).
Permutation permutation_at_index(int m, std::uint64_t index);

// Lexicographic in-place successor; false when wrapping past the last one.
bool advance_permutation(std::vector<int>& order);

}  // namespace rog
