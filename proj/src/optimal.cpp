#include "rog/optimal.hpp"

#include <memory>

namespace rog {

namespace {

// n^m saturating at uint64 max.
std::uint64_t assignment_count(int n, int m) {
  std::uint64_t c = 1;
  for (int i = 0; i < m; ++i) {
    if (c > (~std::uint64_t{0}) / static_cast<std::uint64_t>(n)) return ~std::uint64_t{0};
    c *= static_cast<std::uint64_t>(n);
  }
  return c;
}

struct SearchState {
  const Instance& instance;
  int n;
  int m;
  std::vector<std::unique_ptr<MarginalTracker>> trackers;
  std::vector<std::int64_t> suffix_bound;  // best possible gain from items t+1..m
  std::vector<int> assignment;             // 0-based player per item position
  std::vector<int> best_assignment;
  std::int64_t best = -1;
  std::int64_t current = 0;
  std::uint64_t leaves = 0;

  explicit SearchState(const Instance& inst)
      : instance(inst), n(inst.player_count()), m(inst.item_count()) {
    for (int i = 0; i < n; ++i) trackers.push_back(inst.valuation(i).make_tracker());
    // An item can never gain more than its best singleton value (marginals
    // only shrink as bundles grow), so suffix sums of those are admissible.
    suffix_bound.assign(static_cast<std::size_t>(m) + 1, 0);
    for (int j = m; j >= 1; --j) {
      std::int64_t best_single = 0;
      for (int i = 0; i < n; ++i)
        best_single = std::max(best_single, inst.valuation(i).singleton_value(j));
      suffix_bound[static_cast<std::size_t>(j) - 1] = suffix_bound[static_cast<std::size_t>(j)] + best_single;
    }
    assignment.assign(static_cast<std::size_t>(m), -1);
  }

  // Items are assigned in index order 1..m, players tried in index order, so
  // the first optimum found is the lexicographically smallest one; pruning
  // only discards branches that cannot strictly beat it.
  void search(int item) {
    if (item > m) {
      ++leaves;
      if (current > best) {
        best = current;
        best_assignment = assignment;
      }
      return;
    }
    if (current + suffix_bound[static_cast<std::size_t>(item) - 1] <= best) return;
    for (int i = 0; i < n; ++i) {
      auto& tracker = *trackers[static_cast<std::size_t>(i)];
      const std::int64_t gain = tracker.marginal(item);
      assignment[static_cast<std::size_t>(item) - 1] = i;
      tracker.award(item);
      current += gain;
      search(item + 1);
      current -= gain;
      tracker.unaward(item);
    }
    assignment[static_cast<std::size_t>(item) - 1] = -1;
  }
};

}  // namespace

OptResult brute_force_opt(const Instance& instance, std::uint64_t budget) {
  const std::uint64_t total = assignment_count(instance.player_count(), instance.item_count());
  if (total > budget) throw BudgetError("exhaustive optimum", total, budget);

  SearchState state(instance);
  state.search(1);

  OptResult result;
  result.welfare = state.best;
  result.assignments_searched = state.leaves;
  result.owner.assign(static_cast<std::size_t>(instance.item_count()) + 1, -1);
  result.allocation.bundles.assign(static_cast<std::size_t>(instance.player_count()),
                                   ItemSet(instance.item_count()));
  for (int j = 1; j <= instance.item_count(); ++j) {
    const int who = state.best_assignment[static_cast<std::size_t>(j) - 1];
    result.owner[static_cast<std::size_t>(j)] = who;
    result.allocation.bundles[static_cast<std::size_t>(who)].insert(j);
  }
  result.allocation.welfare = state.best;
  return result;
}

std::int64_t welfare_of(const Instance& instance, const std::vector<ItemSet>& bundles) {
  if (static_cast<int>(bundles.size()) != instance.player_count())
    throw std::invalid_argument("allocation has " + std::to_string(bundles.size()) +
                                " bundles, instance has " + std::to_string(instance.player_count()) +
                                " players");
  ItemSet seen(instance.item_count());
  for (const auto& b : bundles) {
    if (b.max_item() > instance.item_count())
      throw std::invalid_argument("allocation contains out-of-range item " +
                                  std::to_string(b.max_item()));
    if (seen.intersects(b)) throw std::invalid_argument("allocation bundles overlap");
    seen = seen.union_with(b);
  }
  std::int64_t total = 0;
  for (int i = 0; i < instance.player_count(); ++i)
    total += instance.valuation(i).value(bundles[static_cast<std::size_t>(i)]);
  return total;
}

}  // namespace rog
