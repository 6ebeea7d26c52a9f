#include <algorithm>
#include <map>
#include <numeric>

#include "doctest.h"
#include "rog/instance.hpp"
#include "rog/instrumentation.hpp"

using namespace rog;

namespace {

const ClaimReport& claim(const std::vector<ClaimReport>& reports, const std::string& id) {
  for (const auto& r : reports)
    if (r.id == id) return r;
  REQUIRE_MESSAGE(false, "missing claim " << id);
  static ClaimReport dummy;
  return dummy;
}

}  // namespace

TEST_CASE("competitor map on the m=7 family") {
  const Instance inst = lower_bound_instance(7);
  const OptResult opt = brute_force_opt(inst);
  const auto comp = competitor_map(inst, opt);
  // item 1 belongs to player 1 in the optimum; player 2 is the only rival
  // with positive degree there
  CHECK(opt.owner[1] == 0);
  CHECK(comp[1] == 1);
  // item 2's owner is player 2; players 1 and 3 both have degree 1, tie to
  // the lower index
  CHECK(opt.owner[2] == 1);
  CHECK(comp[2] == 0);
  // the star center is worthless to both rivals: zero-degree tie, lowest
  // index != owner
  CHECK(opt.owner[7] == 0);
  CHECK(comp[7] == 1);
}

TEST_CASE("competitor map needs two players") {
  std::vector<Player> players;
  players.push_back({"solo", std::make_shared<VertexCoverValuation>(Graph(3, {{1, 2}}))});
  const Instance inst(3, std::move(players));
  const OptResult opt = brute_force_opt(inst);
  CHECK_THROWS_AS(competitor_map(inst, opt), std::invalid_argument);
}

TEST_CASE("annotated run telescopes and banks nothing on the first step") {
  const Instance inst = lower_bound_instance(7);
  const OptResult opt = brute_force_opt(inst);
  const auto run = annotate_run(inst, Permutation({7, 1, 2, 3, 4, 5, 6}), TieRule::lowest_index(), opt);
  CHECK(run.welfare == 11);
  CHECK(run.steps.front().b_o == 0);
  CHECK(run.steps.front().b_c == 0);
  std::int64_t loss_sum = 0, gain_sum = 0;
  for (const auto& s : run.steps) {
    loss_sum += s.loss;
    gain_sum += s.gain;
  }
  CHECK(loss_sum == opt.welfare);
  CHECK(gain_sum == run.welfare);
  CHECK(run.steps.back().opt_residual == 0);
}

TEST_CASE("identity order banks the whole star before its center") {
  const Instance inst = lower_bound_instance(7);
  const OptResult opt = brute_force_opt(inst);
  const auto run = annotate_run(inst, Permutation::identity(7), TieRule::lowest_index(), opt);
  const StepRecord& last = run.steps.back();
  CHECK(last.item == 7);
  CHECK(last.opt_owner == 0);
  CHECK(last.v_o == 6);
  CHECK(last.b_o == 6);  // player 1 took items 1..6, covering every star edge
  CHECK(last.gain == 0);
  // the run is also a worked example of the per-run accounting claims
  const auto before = check_edge_accounting(run);
  CHECK(before.holds);
  std::int64_t banked = 0;
  for (const auto& s : run.steps) banked += s.b_o + s.b_c;
  CHECK(run.welfare == 6);
  CHECK(*before.margin == Rational(6 - banked));
  CHECK(check_corollary_cor(run).holds);
  CHECK(check_classic(run).holds);
}

TEST_CASE("per-run checks hold across the full m=5 enumeration") {
  const Instance inst = lower_bound_instance(5);
  const OptResult opt = brute_force_opt(inst);
  std::vector<int> order(5);
  std::iota(order.begin(), order.end(), 1);
  do {
    const auto run = annotate_run(inst, Permutation(order), TieRule::lowest_index(), opt);
    REQUIRE(check_edge_accounting(run).holds);
    REQUIRE(check_corollary_cor(run).holds);
    REQUIRE(check_classic(run).holds);
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST_CASE("classic is tight when the optimal owner wins and no rival cares") {
  std::vector<Player> players;
  players.push_back({"a", std::make_shared<VertexCoverValuation>(Graph(2, {{1, 2}}))});
  players.push_back({"b", std::make_shared<VertexCoverValuation>(Graph(2, {}))});
  const Instance inst(2, std::move(players));
  const OptResult opt = brute_force_opt(inst);
  const auto run = annotate_run(inst, Permutation({1, 2}), TieRule::lowest_index(), opt);
  CHECK(run.steps[0].winner == run.steps[0].opt_owner);
  CHECK(run.steps[0].loss == run.steps[0].gain);
}

TEST_CASE("single-item accounting is degenerate but consistent") {
  std::vector<Player> players;
  for (int i = 0; i < 2; ++i)
    players.push_back({"p" + std::to_string(i + 1),
                       std::make_shared<VertexCoverValuation>(Graph(1, {}))});
  const Instance inst(1, std::move(players));
  const OptResult opt = brute_force_opt(inst);
  const auto run = annotate_run(inst, Permutation::identity(1), TieRule::lowest_index(), opt);
  const auto cor = check_corollary_cor(run);
  CHECK(cor.holds);
  CHECK(*cor.margin == Rational(0));  // 0 <= 2*welfare - OPT with welfare = OPT = 0
}

TEST_CASE("expected max of a uniform variable against a constant") {
  CHECK(expected_max_uniform(3, 1) == Rational(7, 4));
  CHECK(expected_max_uniform(2, 5) == Rational(5));
  CHECK(expected_max_uniform(0, 0) == Rational(0));
  CHECK_THROWS_AS(expected_max_uniform(-1, 0), std::invalid_argument);
  // both branch formulas agree at x = y
  for (std::int64_t x = 0; x <= 20; ++x) {
    const Rational closed = Rational(x, 2) + Rational(x * x + x, 2 * (x + 1));
    CHECK(expected_max_uniform(x, x) == Rational(x));
    CHECK(closed == Rational(x));
  }
}

TEST_CASE("before_count extremes and uniformity on the 4-star") {
  const Graph star(4, {{1, 4}, {2, 4}, {3, 4}});
  CHECK(before_count(Permutation({4, 1, 2, 3}), 4, star) == 0);
  CHECK(before_count(Permutation({1, 2, 3, 4}), 4, star) == 3);
  std::map<int, int> histogram;
  std::vector<int> order{1, 2, 3, 4};
  do {
    histogram[before_count(Permutation(order), 4, star)]++;
  } while (std::next_permutation(order.begin(), order.end()));
  REQUIRE(histogram.size() == 4);
  for (const auto& [k, count] : histogram) CHECK(count == 6);  // 24 permutations over 4 buckets
}

TEST_CASE("the full claim battery holds on the m=5 family") {
  const auto reports = verify_claims(lower_bound_instance(5));
  CHECK(claim(reports, "theorem1").holds);
  CHECK(*claim(reports, "theorem1").margin == Rational(1, 2));  // worst ordering scores 4 vs OPT 7
  CHECK(claim(reports, "theorem2").holds);
  CHECK(*claim(reports, "theorem2").margin == Rational(97, 60));  // 337/60 - 4
  CHECK(claim(reports, "before").holds);
  CHECK(claim(reports, "cor").holds);
  CHECK(claim(reports, "classic").holds);
  CHECK(claim(reports, "pos").holds);
  CHECK(claim(reports, "neg").holds);
  CHECK(claim(reports, "before_uniform").holds);
  CHECK(claim(reports, "b_o_le_before").holds);
  CHECK(claim(reports, "technical").holds);
  // every item of this family has v_O >= v_C, so the second-case probe is moot
  CHECK(claim(reports, "neg_case2_reverse").status == ClaimStatus::skipped);
  CHECK(claim(reports, "neg_case2_reverse").informational);
}

TEST_CASE("claim battery exercises items with a strictly stronger competitor") {
  // player 2's triangle out-values player 1's single edge on item 1
  std::vector<Player> players;
  players.push_back({"edge", std::make_shared<VertexCoverValuation>(Graph(3, {{1, 2}}))});
  players.push_back({"triangle",
                     std::make_shared<VertexCoverValuation>(Graph(3, {{1, 2}, {1, 3}, {2, 3}}))});
  const Instance inst(3, std::move(players));
  const auto reports = verify_claims(inst);
  for (const auto& r : reports) {
    if (r.informational) continue;
    CHECK(r.status == ClaimStatus::held);
  }
  CHECK(claim(reports, "neg_case2_reverse").status != ClaimStatus::skipped);
}

TEST_CASE("claim battery on random instances, including a mixed-kind one") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Instance inst = random_instance(2 + static_cast<int>(seed % 2), 5, 0.3 + 0.2 * (seed % 3), seed);
    const auto reports = verify_claims(inst);
    for (const auto& r : reports) {
      if (r.informational) continue;
      CHECK_MESSAGE(r.status == ClaimStatus::held,
                    "claim " << r.id << " on seed " << seed << " note: " << r.note);
    }
  }
  // one vertex-cover player against an additive rival
  std::vector<Player> players;
  players.push_back({"vc", std::make_shared<VertexCoverValuation>(Graph(4, {{1, 2}, {3, 4}, {1, 4}}))});
  players.push_back({"add", std::make_shared<AdditiveValuation>(4, std::vector<std::int64_t>{1, 0, 2, 1})});
  const auto reports = verify_claims(Instance(4, std::move(players)));
  for (const auto& r : reports) {
    if (r.informational || r.status == ClaimStatus::skipped) continue;
    CHECK_MESSAGE(r.status == ClaimStatus::held, "claim " << r.id);
  }
}

TEST_CASE("single-player battery skips competitor claims") {
  std::vector<Player> players;
  players.push_back({"solo", std::make_shared<VertexCoverValuation>(Graph(4, {{1, 2}, {2, 3}}))});
  const auto reports = verify_claims(Instance(4, std::move(players)));
  CHECK(claim(reports, "theorem1").holds);
  CHECK(claim(reports, "theorem2").holds);
  CHECK(claim(reports, "classic").holds);
  CHECK(claim(reports, "before").status == ClaimStatus::skipped);
  CHECK(claim(reports, "cor").status == ClaimStatus::skipped);
  CHECK(claim(reports, "pos").status == ClaimStatus::skipped);
  CHECK(claim(reports, "neg").status == ClaimStatus::skipped);
}

TEST_CASE("budget starvation reports skipped claims, not failures") {
  VerifyConfig config;
  config.perm_budget = 10;
  const auto reports = verify_claims(lower_bound_instance(5), config);
  CHECK(claim(reports, "theorem1").status == ClaimStatus::skipped);
  CHECK(claim(reports, "pos").status == ClaimStatus::skipped);
  CHECK(claim(reports, "technical").holds);  // instance-free, always runs

  VerifyConfig tight_opt;
  tight_opt.opt_budget = 5;
  const auto reports2 = verify_claims(lower_bound_instance(5), tight_opt);
  CHECK(claim(reports2, "theorem1").status == ClaimStatus::skipped);
  CHECK(claim(reports2, "theorem1").note.find("optimum") != std::string::npos);
}

TEST_CASE("standalone pos/neg enumeration with hand-computed slacks") {
  // Two players sharing the single edge (1,2): two orderings in total.
  // Item 1: E[gain]=1, bound 1/2 + 2/4 - 0 = 1, so pos is tight at 0; the
  // loss side gives 1 - (1/2 - 1) = 3/2. Item 2: E[b_C] = 1/2 and
  // E[loss] = 3/2, so both margins are 1/2. Minima: pos 0, neg 1/2.
  std::vector<Player> players;
  for (int i = 1; i <= 2; ++i)
    players.push_back({"p" + std::to_string(i),
                       std::make_shared<VertexCoverValuation>(Graph(2, {{1, 2}}))});
  const Instance inst(2, std::move(players));
  const OptResult opt = brute_force_opt(inst);
  const auto reports = check_pos_neg(inst, TieRule::lowest_index(), opt);
  REQUIRE(reports.size() == 3);
  CHECK(reports[0].id == "pos");
  CHECK(reports[0].holds);
  CHECK(*reports[0].margin == Rational(0));
  CHECK(reports[1].id == "neg");
  CHECK(reports[1].holds);
  CHECK(*reports[1].margin == Rational(1, 2));
  CHECK(reports[2].id == "neg_case2_reverse");
  CHECK(reports[2].status == ClaimStatus::skipped);  // equal degrees, no strict competitor
}

TEST_CASE("standalone pos/neg matches the battery on the m=5 family") {
  const Instance inst = lower_bound_instance(5);
  const OptResult opt = brute_force_opt(inst);
  const auto standalone = check_pos_neg(inst, TieRule::lowest_index(), opt);
  const auto battery = verify_claims(inst);
  CHECK(*standalone[0].margin == *claim(battery, "pos").margin);
  CHECK(*standalone[1].margin == *claim(battery, "neg").margin);

  std::vector<Player> solo;
  solo.push_back({"p1", std::make_shared<VertexCoverValuation>(Graph(2, {{1, 2}}))});
  const Instance single(2, std::move(solo));
  CHECK_THROWS_AS(check_pos_neg(single, TieRule::lowest_index(), brute_force_opt(single)),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_pos_neg(inst, TieRule::lowest_index(), opt, 10), BudgetError);
}

TEST_CASE("verification is identical across worker counts") {
  VerifyConfig one;
  one.workers = 1;
  VerifyConfig four;
  four.workers = 4;
  const auto a = verify_claims(lower_bound_instance(5), one);
  const auto b = verify_claims(lower_bound_instance(5), four);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].id == b[k].id);
    CHECK(a[k].status == b[k].status);
    CHECK(a[k].margin.has_value() == b[k].margin.has_value());
    if (a[k].margin) CHECK(*a[k].margin == *b[k].margin);
  }
}
