#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rog/greedy.hpp"
#include "rog/instance.hpp"
#include "rog/optimal.hpp"
#include "rog/rational.hpp"

namespace rog {

struct OptInfo {
  std::int64_t welfare = 0;
  std::string source;  // "search" | "analytic"
};

struct PlayerExpectation {
  std::string name;
  Rational exact;        // exact mode
  double mean = 0.0;     // monte carlo mode
  double stderr_ = 0.0;  // sample stddev / sqrt(samples)
};

// Expected welfare of the random-order greedy run, either averaged over all
// m! permutations in exact rational arithmetic or estimated by sampling.
struct ExpectationReport {
  enum class Mode { exact, monte_carlo };
  Mode mode = Mode::exact;
  std::vector<PlayerExpectation> players;
  Rational total_exact;
  double total_mean = 0.0;
  double total_stderr = 0.0;
  std::optional<OptInfo> opt;
  std::optional<Rational> ratio_exact;   // total / opt, exact mode with opt
  std::optional<double> ratio;           // either mode with opt
  std::uint64_t permutations = 0;        // exact mode
  std::uint64_t samples = 0;             // monte carlo mode
  std::uint64_t seed = 0;                // monte carlo mode
  std::string rng;                       // generator identifier
  std::string tie_rule;
  std::string instance_hash;
  std::int64_t min_welfare = 0;          // exact mode: worst permutation seen
};

inline constexpr std::uint64_t kDefaultPermBudget = 3'628'800;  // 10!

// Enumerates all m! permutations in lexicographic order. Only deterministic
// tie rules are meaningful here; the seeded-random rule is rejected. When opt
// is supplied the per-permutation half-of-optimum guarantee is asserted as a
// side check and the ratio fields are filled in.
ExpectationReport exact_expectation(const Instance& instance, const TieRule& rule,
                                    std::uint64_t perm_budget = kDefaultPermBudget,
                                    std::optional<OptInfo> opt = std::nullopt, int workers = 1);

// Seeded estimate over `samples` independent uniform permutations. All
// accumulation is in integers, so results are identical for any worker
// count; the final division is the only floating-point step.
ExpectationReport monte_carlo(const Instance& instance, const TieRule& rule, std::uint64_t samples,
                              std::uint64_t seed, std::optional<OptInfo> opt = std::nullopt,
                              int workers = 1);

struct SweepRow {
  int m = 0;
  std::string mode;  // "exact" | "mc"
  std::optional<Rational> e_rog_exact;
  double e_rog = 0.0;
  double e_rog_stderr = 0.0;
  std::int64_t opt_welfare = 0;
  std::string opt_source;
  double ratio = 0.0;
  std::uint64_t samples = 0;  // permutations for exact rows
  std::uint64_t seed = 0;
};

struct SweepConfig {
  std::string mode = "auto";  // auto | exact | mc
  std::uint64_t samples = 200'000;
  std::uint64_t seed = 1;
  std::uint64_t perm_budget = kDefaultPermBudget;
  std::uint64_t opt_budget = kDefaultOptBudget;
  int workers = 1;
  TieRule rule = TieRule::lowest_index();
};

// One row per m: expected greedy welfare vs the optimum for the family.
// "auto" mode enumerates exactly while m! fits the budget, then samples;
// the optimum comes from brute force while n^m fits, else from the family's
// closed form (flagged "analytic").
std::vector<SweepRow> ratio_sweep(
    const std::function<Instance(int)>& family, const std::vector<int>& m_values,
    const SweepConfig& config,
    const std::function<std::optional<std::int64_t>(int)>& analytic_opt = nullptr);

}  // namespace rog
