#include "rog/expectation.hpp"

#include <cmath>
#include <numeric>

#include "rog/parallel.hpp"

namespace rog {

namespace {

struct IntegerStats {
  std::int64_t sum = 0;
  __int128 sum_sq = 0;

  void add(std::int64_t v) {
    sum += v;
    sum_sq += static_cast<__int128>(v) * v;
  }
  void merge(const IntegerStats& o) {
    sum += o.sum;
    sum_sq += o.sum_sq;
  }
  double mean(std::uint64_t n) const { return static_cast<double>(sum) / static_cast<double>(n); }
  double stderr_of_mean(std::uint64_t n) const {
    if (n < 2) return 0.0;
    const long double s = static_cast<long double>(sum);
    const long double sq = static_cast<long double>(sum_sq);
    const long double var = (sq - s * s / static_cast<long double>(n)) / static_cast<long double>(n - 1);
    if (var <= 0) return 0.0;
    return static_cast<double>(std::sqrt(var / static_cast<long double>(n)));
  }
};

void check_rule_deterministic(const TieRule& rule) {
  if (!rule.deterministic())
    throw std::invalid_argument("exact expectation needs a deterministic tie rule");
}

}  // namespace

ExpectationReport exact_expectation(const Instance& instance, const TieRule& rule,
                                    std::uint64_t perm_budget, std::optional<OptInfo> opt,
                                    int workers) {
  check_rule_deterministic(rule);
  const int m = instance.item_count();
  const int n = instance.player_count();
  if (m > 20) throw BudgetError("exact expectation", ~std::uint64_t{0}, perm_budget);
  const std::uint64_t total = factorial(m);
  if (total > perm_budget) throw BudgetError("exact expectation", total, perm_budget);

  struct ChunkResult {
    std::vector<std::int64_t> player_sums;
    std::int64_t min_welfare = 0;
  };
  const std::uint64_t chunk_count = std::min<std::uint64_t>(total, 256);
  std::vector<ChunkResult> results(chunk_count);

  run_chunks(chunk_count, workers, [&](std::uint64_t c) {
    const std::uint64_t begin = total / chunk_count * c + std::min<std::uint64_t>(c, total % chunk_count);
    const std::uint64_t end =
        total / chunk_count * (c + 1) + std::min<std::uint64_t>(c + 1, total % chunk_count);
    ChunkResult& out = results[c];
    out.player_sums.assign(static_cast<std::size_t>(n), 0);
    out.min_welfare = INT64_MAX;
    GreedyRunner runner(instance);
    std::vector<int> order = permutation_at_index(m, begin).order();
    std::vector<std::int64_t> values;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      const std::int64_t welfare = runner.run(order, rule, values);
      for (int i = 0; i < n; ++i) out.player_sums[static_cast<std::size_t>(i)] += values[static_cast<std::size_t>(i)];
      out.min_welfare = std::min(out.min_welfare, welfare);
      advance_permutation(order);
    }
  });

  std::vector<std::int64_t> sums(static_cast<std::size_t>(n), 0);
  std::int64_t min_welfare = INT64_MAX;
  for (const auto& r : results) {
    for (int i = 0; i < n; ++i) sums[static_cast<std::size_t>(i)] += r.player_sums[static_cast<std::size_t>(i)];
    min_welfare = std::min(min_welfare, r.min_welfare);
  }

  ExpectationReport report;
  report.mode = ExpectationReport::Mode::exact;
  report.permutations = total;
  report.tie_rule = rule.describe();
  report.instance_hash = instance_hash(instance);
  report.min_welfare = min_welfare;
  report.total_exact = Rational(0);
  for (int i = 0; i < n; ++i) {
    PlayerExpectation pe;
    pe.name = instance.player(i).name;
    pe.exact = Rational(sums[static_cast<std::size_t>(i)], static_cast<int128>(total));
    pe.mean = pe.exact.to_double();
    report.total_exact += pe.exact;
    report.players.push_back(std::move(pe));
  }
  report.total_mean = report.total_exact.to_double();
  if (opt) {
    report.opt = opt;
    report.ratio_exact = report.total_exact / Rational(opt->welfare);
    report.ratio = report.ratio_exact->to_double();
    // Every single ordering is guaranteed at least half the optimum; a miss
    // here means the greedy or the optimum search is broken.
    if (min_welfare * 2 < opt->welfare)
      throw std::logic_error("per-permutation half-of-optimum guarantee violated");
  }
  return report;
}

ExpectationReport monte_carlo(const Instance& instance, const TieRule& rule, std::uint64_t samples,
                              std::uint64_t seed, std::optional<OptInfo> opt, int workers) {
  if (samples < 2) throw std::invalid_argument("monte carlo needs at least 2 samples");
  const int m = instance.item_count();
  const int n = instance.player_count();

  constexpr std::uint64_t kChunk = 8192;
  const std::uint64_t chunk_count = (samples + kChunk - 1) / kChunk;

  struct ChunkResult {
    std::vector<IntegerStats> players;
    IntegerStats welfare;
  };
  std::vector<ChunkResult> results(chunk_count);

  run_chunks(chunk_count, workers, [&](std::uint64_t c) {
    const std::uint64_t begin = c * kChunk;
    const std::uint64_t count = std::min(kChunk, samples - begin);
    ChunkResult& out = results[c];
    out.players.assign(static_cast<std::size_t>(n), {});
    Rng rng(Rng::derive_seed(seed, c));
    GreedyRunner runner(instance);
    std::vector<int> order(static_cast<std::size_t>(m));
    std::vector<std::int64_t> values;
    for (std::uint64_t s = 0; s < count; ++s) {
      std::iota(order.begin(), order.end(), 1);
      fisher_yates(order, rng);
      const std::int64_t welfare = runner.run(order, rule, values);
      for (int i = 0; i < n; ++i) out.players[static_cast<std::size_t>(i)].add(values[static_cast<std::size_t>(i)]);
      out.welfare.add(welfare);
    }
  });

  std::vector<IntegerStats> players(static_cast<std::size_t>(n));
  IntegerStats welfare;
  for (const auto& r : results) {
    for (int i = 0; i < n; ++i) players[static_cast<std::size_t>(i)].merge(r.players[static_cast<std::size_t>(i)]);
    welfare.merge(r.welfare);
  }

  ExpectationReport report;
  report.mode = ExpectationReport::Mode::monte_carlo;
  report.samples = samples;
  report.seed = seed;
  report.rng = Rng::generator_id();
  report.tie_rule = rule.describe();
  report.instance_hash = instance_hash(instance);
  for (int i = 0; i < n; ++i) {
    PlayerExpectation pe;
    pe.name = instance.player(i).name;
    pe.mean = players[static_cast<std::size_t>(i)].mean(samples);
    pe.stderr_ = players[static_cast<std::size_t>(i)].stderr_of_mean(samples);
    report.players.push_back(std::move(pe));
  }
  report.total_mean = welfare.mean(samples);
  report.total_stderr = welfare.stderr_of_mean(samples);
  if (opt) {
    report.opt = opt;
    report.ratio = report.total_mean / static_cast<double>(opt->welfare);
  }
  return report;
}

std::vector<SweepRow> ratio_sweep(const std::function<Instance(int)>& family,
                                  const std::vector<int>& m_values, const SweepConfig& config,
                                  const std::function<std::optional<std::int64_t>(int)>& analytic_opt) {
  if (m_values.empty()) throw std::invalid_argument("empty m list");
  if (config.mode != "auto" && config.mode != "exact" && config.mode != "mc")
    throw std::invalid_argument("sweep mode must be auto, exact or mc");

  std::vector<SweepRow> rows;
  for (int m : m_values) {
    const Instance instance = family(m);

    OptInfo opt;
    const std::uint64_t assignments = [&] {
      long double a = 1;
      for (int i = 0; i < instance.item_count(); ++i) a *= instance.player_count();
      return a > 1e18L ? ~std::uint64_t{0} : static_cast<std::uint64_t>(a);
    }();
    if (assignments <= config.opt_budget) {
      opt = {brute_force_opt(instance, config.opt_budget).welfare, "search"};
    } else if (analytic_opt) {
      const auto closed = analytic_opt(m);
      if (!closed) throw BudgetError("sweep optimum", assignments, config.opt_budget);
      opt = {*closed, "analytic"};
    } else {
      throw BudgetError("sweep optimum", assignments, config.opt_budget);
    }

    bool exact = config.mode == "exact";
    if (config.mode == "auto")
      exact = instance.item_count() <= 20 && factorial(std::min(instance.item_count(), 20)) <= config.perm_budget;

    SweepRow row;
    row.m = m;
    row.opt_welfare = opt.welfare;
    row.opt_source = opt.source;
    if (exact) {
      const auto report =
          exact_expectation(instance, config.rule, config.perm_budget, opt, config.workers);
      row.mode = "exact";
      row.e_rog_exact = report.total_exact;
      row.e_rog = report.total_exact.to_double();
      row.e_rog_stderr = 0.0;
      row.ratio = *report.ratio;
      row.samples = report.permutations;
      row.seed = 0;
    } else {
      const auto report =
          monte_carlo(instance, config.rule, config.samples, config.seed, opt, config.workers);
      row.mode = "mc";
      row.e_rog = report.total_mean;
      row.e_rog_stderr = report.total_stderr;
      row.ratio = *report.ratio;
      row.samples = report.samples;
      row.seed = report.seed;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace rog
