#include "rog/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rog {

Permutation::Permutation(std::vector<int> order) : order_(std::move(order)) {
  const int m = static_cast<int>(order_.size());
  if (m == 0) throw std::invalid_argument("empty permutation");
  std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
  for (int j : order_) {
    if (j < 1 || j > m || seen[static_cast<std::size_t>(j)])
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(m));
    seen[static_cast<std::size_t>(j)] = true;
  }
}

std::vector<int> Permutation::positions() const {
  std::vector<int> pos(order_.size() + 1, -1);
  for (std::size_t t = 0; t < order_.size(); ++t) pos[static_cast<std::size_t>(order_[t])] = static_cast<int>(t);
  return pos;
}

Permutation Permutation::identity(int m) {
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 1);
  return Permutation(std::move(order));
}

Permutation random_permutation(int m, Rng& rng) {
  if (m < 1) throw std::invalid_argument("need at least one item");
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 1);
  fisher_yates(order, rng);
  return Permutation(std::move(order));
}

Permutation random_permutation(int m, std::uint64_t seed) {
  Rng rng(seed);
  return random_permutation(m, rng);
}

std::uint64_t factorial(int m) {
  if (m < 0 || m > 20) throw std::overflow_error("factorial overflows past 20!");
  std::uint64_t f = 1;
  for (int i = 2; i <= m; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

Permutation permutation_at_index(int m, std::uint64_t index) {
  if (index >= factorial(m)) throw std::invalid_argument("permutation index out of range");
  std::vector<int> pool(static_cast<std::size_t>(m));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> order;
  order.reserve(pool.size());
  for (int remaining = m; remaining > 0; --remaining) {
    const std::uint64_t block = factorial(remaining - 1);
    const std::size_t pick = static_cast<std::size_t>(index / block);
    index %= block;
    order.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return Permutation(std::move(order));
}

bool advance_permutation(std::vector<int>& order) {
  return std::next_permutation(order.begin(), order.end());
}

}  // namespace rog
