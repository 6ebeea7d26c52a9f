#include "rog/greedy.hpp"

#include <stdexcept>

namespace rog {

std::string TieRule::describe() const {
  switch (kind) {
    case Kind::lowest_index:
      return "lowest_index";
    case Kind::seeded_random:
      return "seeded_random(" + std::to_string(seed) + ")";
    case Kind::preference: {
      std::string s = "preference(";
      for (std::size_t i = 0; i < preference.size(); ++i)
        s += (i ? "," : "") + std::to_string(preference[i] + 1);
      return s + ")";
    }
  }
  return "?";
}

namespace {

void validate_rule(const TieRule& rule, int n) {
  if (rule.kind != TieRule::Kind::preference) return;
  if (static_cast<int>(rule.preference.size()) != n)
    throw std::invalid_argument("preference tie rule must order all players");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int i : rule.preference) {
    if (i < 0 || i >= n || seen[static_cast<std::size_t>(i)])
      throw std::invalid_argument("preference tie rule is not a player ordering");
    seen[static_cast<std::size_t>(i)] = true;
  }
}

// Picks the winner among the tied players. tie_set is ascending.
int resolve_tie(const std::vector<int>& tie_set, const TieRule& rule, Rng* rng) {
  if (tie_set.size() == 1) return tie_set[0];
  switch (rule.kind) {
    case TieRule::Kind::lowest_index:
      return tie_set[0];
    case TieRule::Kind::seeded_random:
      return tie_set[static_cast<std::size_t>(rng->bounded(tie_set.size()))];
    case TieRule::Kind::preference:
      for (int i : rule.preference) {
        for (int t : tie_set)
          if (t == i) return i;
      }
      throw std::logic_error("preference order missed the tie set");
  }
  throw std::logic_error("unknown tie rule");
}

}  // namespace

GreedyResult run_greedy(const Instance& instance, const Permutation& sigma, const TieRule& rule) {
  const int n = instance.player_count();
  const int m = instance.item_count();
  if (sigma.item_count() != m)
    throw std::invalid_argument("permutation is over " + std::to_string(sigma.item_count()) +
                                " items, instance has " + std::to_string(m));
  validate_rule(rule, n);

  std::vector<std::unique_ptr<MarginalTracker>> trackers;
  trackers.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) trackers.push_back(instance.valuation(i).make_tracker());

  std::optional<Rng> rng;
  if (rule.kind == TieRule::Kind::seeded_random) rng.emplace(rule.seed);

  GreedyResult result{Allocation{}, GreedyTrace{sigma, {}, {}}};
  result.allocation.bundles.assign(static_cast<std::size_t>(n), ItemSet(m));
  result.trace.player_values.assign(static_cast<std::size_t>(n), 0);
  result.trace.steps.reserve(static_cast<std::size_t>(m));

  for (int t = 0; t < m; ++t) {
    GreedyStep step;
    step.item = sigma.item_at(t);
    step.marginals.resize(static_cast<std::size_t>(n));
    std::int64_t best = -1;
    for (int i = 0; i < n; ++i) {
      const std::int64_t g = trackers[static_cast<std::size_t>(i)]->marginal(step.item);
      step.marginals[static_cast<std::size_t>(i)] = g;
      if (g > best) best = g;
    }
    for (int i = 0; i < n; ++i)
      if (step.marginals[static_cast<std::size_t>(i)] == best) step.tie_set.push_back(i);
    step.winner = resolve_tie(step.tie_set, rule, rng ? &*rng : nullptr);
    step.gain = best;
    trackers[static_cast<std::size_t>(step.winner)]->award(step.item);
    result.allocation.bundles[static_cast<std::size_t>(step.winner)].insert(step.item);
    result.trace.player_values[static_cast<std::size_t>(step.winner)] += best;
    result.allocation.welfare += best;
    result.trace.steps.push_back(std::move(step));
  }
  return result;
}

GreedyRunner::GreedyRunner(const Instance& instance) : instance_(instance) {
  for (int i = 0; i < instance.player_count(); ++i)
    trackers_.push_back(instance.valuation(i).make_tracker());
}

std::int64_t GreedyRunner::run(const std::vector<int>& order, const TieRule& rule,
                               std::vector<std::int64_t>& player_values) {
  const int n = instance_.player_count();
  validate_rule(rule, n);
  std::optional<Rng> rng;
  if (rule.kind == TieRule::Kind::seeded_random) rng.emplace(rule.seed);

  for (auto& tr : trackers_) tr->reset();
  player_values.assign(static_cast<std::size_t>(n), 0);
  std::int64_t welfare = 0;

  for (int item : order) {
    std::int64_t best = -1;
    tie_scratch_.clear();
    for (int i = 0; i < n; ++i) {
      const std::int64_t g = trackers_[static_cast<std::size_t>(i)]->marginal(item);
      if (g > best) {
        best = g;
        tie_scratch_.clear();
        tie_scratch_.push_back(i);
      } else if (g == best) {
        tie_scratch_.push_back(i);
      }
    }
    const int winner = resolve_tie(tie_scratch_, rule, rng ? &*rng : nullptr);
    trackers_[static_cast<std::size_t>(winner)]->award(item);
    player_values[static_cast<std::size_t>(winner)] += best;
    welfare += best;
  }
  return welfare;
}

}  // namespace rog
