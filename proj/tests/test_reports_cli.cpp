#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "rog/cli.hpp"
#include "rog/serialize.hpp"

using namespace rog;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("expectation reports serialize deterministically across worker counts") {
  const Instance inst = lower_bound_instance(7);
  const OptInfo opt{11, "search"};
  const auto exact1 = exact_expectation(inst, TieRule::lowest_index(), kDefaultPermBudget, opt, 1);
  const auto exact4 = exact_expectation(inst, TieRule::lowest_index(), kDefaultPermBudget, opt, 4);
  CHECK(expectation_report_json(exact1).dump(2) == expectation_report_json(exact4).dump(2));
  CHECK(expectation_report_csv(exact1) == expectation_report_csv(exact4));

  const auto mc1 = monte_carlo(inst, TieRule::lowest_index(), 30'000, 9, opt, 1);
  const auto mc4 = monte_carlo(inst, TieRule::lowest_index(), 30'000, 9, opt, 4);
  CHECK(expectation_report_json(mc1).dump(2) == expectation_report_json(mc4).dump(2));
  CHECK(expectation_report_csv(mc1) == expectation_report_csv(mc4));
}

TEST_CASE("exact expectation json carries exact rationals") {
  const Instance inst = lower_bound_instance(5);
  const auto report =
      exact_expectation(inst, TieRule::lowest_index(), kDefaultPermBudget, OptInfo{7, "search"});
  const ordered_json j = expectation_report_json(report);
  CHECK(j["mode"] == "exact");
  CHECK(j["permutations"] == 120);
  CHECK(j["players"][1]["expected"]["num"] == "4");
  CHECK(j["players"][1]["expected"]["den"] == "3");
  CHECK(j["total"]["num"] == "337");
  CHECK(j["total"]["den"] == "60");
  CHECK(j["opt"]["welfare"] == 7);
  CHECK(j["ratio"]["num"] == "337");
  CHECK(j["ratio"]["den"] == "420");
  CHECK(j["tool"] == "rog 0.1.0");
  CHECK(j.contains("instance_hash"));
}

TEST_CASE("claim reports serialize with witnesses only on failure") {
  const auto reports = verify_claims(lower_bound_instance(5));
  const ordered_json j = claim_reports_json("deadbeef", reports);
  CHECK(j["instance_hash"] == "deadbeef");
  for (const auto& cj : j["claims"]) {
    if (cj["status"] == "held") CHECK_FALSE(cj.contains("witness"));
  }
}

TEST_CASE("sweep csv layout") {
  SweepConfig config;
  const auto rows = ratio_sweep([](int m) { return lower_bound_instance(m); }, {5}, config,
                                [](int m) { return std::optional<std::int64_t>(2 * m - 3); });
  const std::string csv = sweep_csv(rows);
  CHECK(csv.find("m,mode,e_rog,e_rog_stderr,opt,ratio,samples,seed,opt_source\n") == 0);
  CHECK(csv.find("5,exact,5.61666666667,0,7,0.802380952381,120,0,search") != std::string::npos);
}

TEST_CASE("cli generate writes the family byte-identically") {
  const auto a = cli({"generate", "paper", "--m", "7"});
  const auto b = cli({"generate", "paper", "--m", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const Instance parsed = instance_from_json_text(a.out);
  CHECK(parsed == lower_bound_instance(7));

  const auto bad = cli({"generate", "paper", "--m", "4"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("odd m >= 5") != std::string::npos);

  const auto r1 = cli({"generate", "random", "--n", "3", "--m", "6", "--p", "0.5", "--seed", "1"});
  const auto r2 = cli({"generate", "random", "--n", "3", "--m", "6", "--p", "0.5", "--seed", "1"});
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);
}

TEST_CASE("cli run reproduces the worked orderings") {
  const auto identity = cli({"run", "--family", "paper", "--m", "7", "--perm", "1,2,3,4,5,6,7"});
  CHECK(identity.code == 0);
  CHECK(identity.out.find("welfare: 6") != std::string::npos);

  const auto center = cli({"run", "--family", "paper", "--m", "7", "--perm", "7,1,2,3,4,5,6"});
  CHECK(center.code == 0);
  CHECK(center.out.find("welfare: 11") != std::string::npos);

  const auto bad = cli({"run", "--family", "paper", "--m", "7", "--perm", "1,1,2"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("not a permutation") != std::string::npos);

  const auto no_order = cli({"run", "--family", "paper", "--m", "7"});
  CHECK(no_order.code == 2);
}

TEST_CASE("cli run trace emits the per-step table and a json variant") {
  const auto table = cli({"run", "--family", "paper", "--m", "5", "--perm", "1,2,3,4,5", "--trace"});
  CHECK(table.code == 0);
  CHECK(table.out.find("OPT^t") != std::string::npos);

  const auto json = cli({"run", "--family", "paper", "--m", "5", "--perm", "1,2,3,4,5", "--trace",
                         "--format", "json"});
  CHECK(json.code == 0);
  const auto j = ordered_json::parse(json.out);
  CHECK(j["welfare"] == 4);
  CHECK(j["trace"].size() == 5);
  CHECK(j["trace"][4]["b_o"] == 4);

  const auto refused = cli({"run", "--family", "paper", "--m", "5", "--perm", "1,2,3,4,5",
                            "--trace", "--opt-budget", "3"});
  CHECK(refused.code == 2);
  CHECK(refused.err.find("--trace needs the exact optimum") != std::string::npos);
}

TEST_CASE("cli run with a seed is reproducible") {
  const auto a = cli({"run", "--family", "paper", "--m", "7", "--seed", "13", "--format", "json"});
  const auto b = cli({"run", "--family", "paper", "--m", "7", "--seed", "13", "--format", "json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(ordered_json::parse(a.out)["seed"] == 13);
}

TEST_CASE("cli expect renders exact rationals") {
  const auto table = cli({"expect", "--family", "paper", "--m", "5", "--mode", "exact"});
  CHECK(table.code == 0);
  CHECK(table.out.find("E[p2] = 4/3") != std::string::npos);
  CHECK(table.out.find("opt = 7 (search)") != std::string::npos);

  const auto too_few = cli({"expect", "--family", "paper", "--m", "5", "--mode", "mc", "--samples", "1"});
  CHECK(too_few.code == 2);
}

TEST_CASE("cli expect monte carlo is byte-identical across workers") {
  const std::vector<std::string> base = {"expect", "--family", "paper", "--m",      "9",
                                         "--mode", "mc",       "--samples", "20000", "--seed", "3",
                                         "--format", "json"};
  auto with_workers = [&](const char* w) {
    auto args = base;
    args.push_back("--workers");
    args.push_back(w);
    return cli(args);
  };
  const auto one = with_workers("1");
  const auto four = with_workers("4");
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
}

TEST_CASE("cli rejects the random tie rule in exact mode but accepts it elsewhere") {
  const auto rejected = cli({"expect", "--family", "paper", "--m", "5", "--mode", "exact",
                             "--ties", "random"});
  CHECK(rejected.code == 2);
  CHECK(rejected.err.find("deterministic") != std::string::npos);

  const auto run_random = cli({"run", "--family", "paper", "--m", "5", "--perm", "1,2,3,4,5",
                               "--ties", "random", "--tie-seed", "4"});
  CHECK(run_random.code == 0);

  const auto mc_random = cli({"expect", "--family", "paper", "--m", "5", "--mode", "mc",
                              "--samples", "500", "--seed", "2", "--ties", "random",
                              "--tie-seed", "4"});
  CHECK(mc_random.code == 0);
}

TEST_CASE("cli verify passes a random instance end to end") {
  const auto ok = cli({"verify", "--family", "random", "--n", "3", "--m", "5", "--p", "0.5",
                       "--gen-seed", "12"});
  CHECK(ok.code == 0);
}

TEST_CASE("cli verify exit codes") {
  const auto ok = cli({"verify", "--family", "paper", "--m", "5"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("theorem1") != std::string::npos);

  const auto skipped = cli({"verify", "--family", "paper", "--m", "5", "--perm-budget", "10"});
  CHECK(skipped.code == 0);  // skipped but not strict

  const auto strict = cli({"verify", "--family", "paper", "--m", "5", "--perm-budget", "10", "--strict"});
  CHECK(strict.code == 3);

  const auto filtered = cli({"verify", "--family", "paper", "--m", "5", "--claims", "technical,theorem1"});
  CHECK(filtered.code == 0);

  const auto unknown = cli({"verify", "--family", "paper", "--m", "5", "--claims", "nonsense"});
  CHECK(unknown.code == 2);

  const auto json = cli({"verify", "--family", "paper", "--m", "5", "--format", "json"});
  CHECK(json.code == 0);
  CHECK(ordered_json::parse(json.out)["claims"].size() == 11);
}

TEST_CASE("cli sweep produces the csv with both opt sources") {
  const auto ok = cli({"sweep", "--family", "paper", "--m-list", "5,7", "--samples", "2000"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("5,exact,") != std::string::npos);
  CHECK(ok.out.find(",search\n") != std::string::npos);

  const auto analytic = cli({"sweep", "--family", "paper", "--m-list", "5", "--opt-budget", "9"});
  CHECK(analytic.code == 0);
  CHECK(analytic.out.find(",analytic\n") != std::string::npos);

  const auto bad = cli({"sweep", "--family", "paper", "--m-list", ""});
  CHECK(bad.code == 2);

  const auto missing = cli({"sweep", "--family", "paper"});
  CHECK(missing.code == 2);
}

TEST_CASE("cli file output and misc flags") {
  const std::string path = "cli_sweep_out.csv";
  const auto to_file = cli({"sweep", "--family", "paper", "--m-list", "5", "--out", path});
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  std::string header;
  std::getline(f, header);
  CHECK(header.find("m,mode") == 0);
  f.close();
  std::remove(path.c_str());

  const auto version = cli({"--version"});
  CHECK(version.code == 0);
  CHECK(version.out.find("rog 0.1.0") != std::string::npos);

  const auto nothing = cli({});
  CHECK(nothing.code == 2);

  const auto unknown_flag = cli({"expect", "--family", "paper", "--m", "5", "--bogus"});
  CHECK(unknown_flag.code == 2);
}
