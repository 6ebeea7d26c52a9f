#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "rog/instance.hpp"
#include "rog/optimal.hpp"

using namespace rog;

TEST_CASE("optimum of the m=7 family is 11 with the lexicographically least assignment") {
  const Instance inst = lower_bound_instance(7);
  const OptResult opt = brute_force_opt(inst);
  // All 2m-3 = 11 edges can be covered at once, and welfare can never exceed
  // the total edge count, so 11 is the optimum.
  CHECK(opt.welfare == 11);
  CHECK(opt.allocation.welfare == 11);
  CHECK(std::vector<int>(opt.owner.begin() + 1, opt.owner.end()) ==
        std::vector<int>{0, 1, 2, 1, 2, 1, 0});
  CHECK(opt.allocation.bundles[0].to_vector() == std::vector<int>{1, 7});
  CHECK(opt.allocation.bundles[1].to_vector() == std::vector<int>{2, 4, 6});
  CHECK(opt.allocation.bundles[2].to_vector() == std::vector<int>{3, 5});
  CHECK(opt.assignments_searched > 0);
  // The star-center/odds/evens split also attains the optimum.
  std::vector<ItemSet> split(3, ItemSet(7));
  split[0].insert(7);
  for (int j = 1; j <= 5; j += 2) split[1].insert(j);
  for (int j = 2; j <= 6; j += 2) split[2].insert(j);
  CHECK(welfare_of(inst, split) == 11);
}

TEST_CASE("family optimum follows 2m-3") {
  CHECK(brute_force_opt(lower_bound_instance(5)).welfare == 7);
  CHECK(brute_force_opt(lower_bound_instance(7)).welfare == 11);
  CHECK(brute_force_opt(lower_bound_instance(9)).welfare == 15);
}

TEST_CASE("single player gets everything") {
  std::vector<Player> players;
  players.push_back({"solo", std::make_shared<VertexCoverValuation>(Graph(4, {{1, 2}, {2, 3}}))});
  const Instance inst(4, std::move(players));
  const OptResult opt = brute_force_opt(inst);
  CHECK(opt.welfare == 2);
  CHECK(opt.allocation.bundles[0].size() == 4);
}

TEST_CASE("two players sharing one edge split its endpoints") {
  std::vector<Player> players;
  for (int i = 1; i <= 2; ++i)
    players.push_back({"p" + std::to_string(i),
                       std::make_shared<VertexCoverValuation>(Graph(2, {{1, 2}}))});
  const Instance inst(2, std::move(players));
  const OptResult opt = brute_force_opt(inst);
  CHECK(opt.welfare == 2);
  CHECK(opt.owner[1] != opt.owner[2]);
}

TEST_CASE("budget refusal names the required count") {
  const Instance inst = random_instance(3, 20, 0.5, 1);
  try {
    brute_force_opt(inst, 1000);
    FAIL("expected a budget error");
  } catch (const BudgetError& e) {
    CHECK(e.required() == std::uint64_t{3486784401});  // 3^20
    CHECK(std::string(e.what()).find("budget") != std::string::npos);
  }
}

TEST_CASE("welfare_of validates and sums") {
  const Instance inst = lower_bound_instance(7);
  std::vector<ItemSet> empty(3, ItemSet(7));
  CHECK(welfare_of(inst, empty) == 0);
  std::vector<ItemSet> all_to_p2(3, ItemSet(7));
  all_to_p2[1] = ItemSet::full(7);
  CHECK(welfare_of(inst, all_to_p2) == 3);
  std::vector<ItemSet> overlap(3, ItemSet(7));
  overlap[0].insert(1);
  overlap[1].insert(1);
  CHECK_THROWS_WITH_AS(welfare_of(inst, overlap), doctest::Contains("overlap"),
                       std::invalid_argument);
  std::vector<ItemSet> out_of_range(3, ItemSet(7));
  out_of_range[2].insert(9);
  CHECK_THROWS_AS(welfare_of(inst, out_of_range), std::invalid_argument);
  CHECK_THROWS_AS(welfare_of(inst, std::vector<ItemSet>(2)), std::invalid_argument);
}

TEST_CASE("brute force dominates greedy runs and random allocations") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Instance inst = random_instance(3, 5, 0.5, seed);
    const OptResult opt = brute_force_opt(inst);
    GreedyRunner runner(inst);
    std::vector<int> order(5);
    std::iota(order.begin(), order.end(), 1);
    std::vector<std::int64_t> values;
    do {
      CHECK(runner.run(order, TieRule::lowest_index(), values) <= opt.welfare);
    } while (std::next_permutation(order.begin(), order.end()));

    Rng rng(seed * 31);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<ItemSet> bundles(3, ItemSet(5));
      for (int j = 1; j <= 5; ++j) bundles[static_cast<std::size_t>(rng.bounded(3))].insert(j);
      CHECK(welfare_of(inst, bundles) <= opt.welfare);
    }
  }
}
