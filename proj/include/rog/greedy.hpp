#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rog/instance.hpp"
#include "rog/permutation.hpp"
#include "rog/rng.hpp"

namespace rog {

// How an item is assigned when several players share the maximal marginal.
// lowest_index matches the instance's player order; preference generalizes
// it to an arbitrary fixed order (used by the relabeling tests); random
// picks uniformly among the tied players, deterministically per seed.
struct TieRule {
  enum class Kind { lowest_index, seeded_random, preference };
  Kind kind = Kind::lowest_index;
  std::uint64_t seed = 0;               // seeded_random only
  std::vector<int> preference;          // preference only: player indices, best first

  static TieRule lowest_index() { return {}; }
  static TieRule seeded_random(std::uint64_t seed) {
    return {Kind::seeded_random, seed, {}};
  }
  static TieRule by_preference(std::vector<int> order) {
    return {Kind::preference, 0, std::move(order)};
  }

  bool deterministic() const { return kind != Kind::seeded_random; }
  std::string describe() const;
};

struct Allocation {
  std::vector<ItemSet> bundles;  // per player
  std::int64_t welfare = 0;
};

struct GreedyStep {
  int item = 0;
  std::vector<std::int64_t> marginals;  // per player, before the award
  std::vector<int> tie_set;             // argmax players, ascending
  int winner = -1;
  std::int64_t gain = 0;
};

struct GreedyTrace {
  Permutation permutation;
  std::vector<GreedyStep> steps;
  std::vector<std::int64_t> player_values;  // final v_i(S_i)
};

struct GreedyResult {
  Allocation allocation;
  GreedyTrace trace;
};

// Runs the greedy allocation loop for one fixed item order: every item goes
// to a player with maximal marginal value (ties resolved by the rule), and
// items worth nothing to everyone are still assigned.
GreedyResult run_greedy(const Instance& instance, const Permutation& sigma, const TieRule& rule);

// Reusable runner for hot loops (expectation sweeps): no trace, no per-run
// allocations beyond the first. Not thread-safe; use one per worker.
class GreedyRunner {
 public:
  explicit GreedyRunner(const Instance& instance);

  // Returns total welfare; player_values (size n) receives v_i(S_i^m).
  std::int64_t run(const std::vector<int>& order, const TieRule& rule,
                   std::vector<std::int64_t>& player_values);

 private:
  const Instance& instance_;
  std::vector<std::unique_ptr<MarginalTracker>> trackers_;
  std::vector<int> tie_scratch_;
};

}  // namespace rog
