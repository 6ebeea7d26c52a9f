#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rog/greedy.hpp"
#include "rog/instance.hpp"

namespace rog {

// Raised when an exhaustive computation would exceed its configured budget;
// carries how much it would actually need.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, std::uint64_t required, std::uint64_t budget)
      : std::runtime_error(what + " needs " + std::to_string(required) + ", budget is " +
                           std::to_string(budget)),
        required_(required) {}
  std::uint64_t required() const { return required_; }

 private:
  std::uint64_t required_;
};

struct OptResult {
  Allocation allocation;
  std::int64_t welfare = 0;
  std::vector<int> owner;  // owner[item] = player index, items 1..m
  std::uint64_t assignments_searched = 0;
};

inline constexpr std::uint64_t kDefaultOptBudget = 10'000'000;

// Exhaustive search over all n^m full assignments with branch-and-bound
// pruning. Among equal-welfare optima returns the lexicographically smallest
// assignment vector (item 1's player, then item 2's, ...), so every
// downstream quantity derived from "the" optimum is reproducible.
OptResult brute_force_opt(const Instance& instance, std::uint64_t budget = kDefaultOptBudget);

// Checks bundles are disjoint and in range, then sums player values.
std::int64_t welfare_of(const Instance& instance, const std::vector<ItemSet>& bundles);

}  // namespace rog
