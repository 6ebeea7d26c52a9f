#include "rog/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "rog/expectation.hpp"
#include "rog/instance.hpp"
#include "rog/instrumentation.hpp"
#include "rog/serialize.hpp"
#include "rog/version.hpp"

namespace rog {

namespace {

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> values;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      values.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) + ": \"" + token + "\" is not an integer");
    }
  }
  if (values.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
  return values;
}

// Options shared by every subcommand that needs an instance.
struct InstanceSource {
  std::string path;
  std::string family;
  int m = 0;
  int n = 3;
  double p = 0.5;
  std::uint64_t gen_seed = 1;

  void attach(CLI::App* cmd) {
    auto* inst = cmd->add_option("--instance", path, "instance JSON file");
    auto* fam = cmd->add_option("--family", family, "built-in family: paper | random")
                    ->check(CLI::IsMember({"paper", "random"}));
    cmd->add_option("--m", m, "item count (family instances)");
    cmd->add_option("--n", n, "player count (random family)")->capture_default_str();
    cmd->add_option("--p", p, "edge probability (random family)")->capture_default_str();
    cmd->add_option("--gen-seed", gen_seed, "seed of the random family")->capture_default_str();
    inst->excludes(fam);
  }

  Instance resolve() const {
    if (!path.empty()) return load_instance(path);
    if (family == "paper") {
      if (m == 0) throw std::invalid_argument("--family paper needs --m");
      return lower_bound_instance(m);
    }
    if (family == "random") {
      if (m == 0) throw std::invalid_argument("--family random needs --m");
      return random_instance(n, m, p, gen_seed);
    }
    throw std::invalid_argument("need an instance: --instance FILE or --family paper|random");
  }

  bool is_paper_family() const { return path.empty() && family == "paper"; }
};

TieRule resolve_tie_rule(const std::string& name, std::uint64_t tie_seed) {
  if (name == "lowest") return TieRule::lowest_index();
  if (name == "random") return TieRule::seeded_random(tie_seed);
  throw std::invalid_argument("unknown tie rule: " + name);
}

void write_output(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write output file: " + out_path);
  f << text;
}

// For the paper family the exhaustively verified optimum closed form is
// 2m-3: the three graphs hold (m-1) + (m-1)/2 + (m-3)/2 edges in total,
// welfare never exceeds the edge count, and the star-center/odds/evens
// split attains it.
std::optional<std::int64_t> paper_family_opt(int m) { return 2 * m - 3; }

std::optional<OptInfo> compute_opt(const Instance& instance, const InstanceSource& source,
                                   std::uint64_t opt_budget) {
  try {
    return OptInfo{brute_force_opt(instance, opt_budget).welfare, "search"};
  } catch (const BudgetError&) {
    if (source.is_paper_family()) return OptInfo{*paper_family_opt(instance.item_count()), "analytic"};
    return std::nullopt;
  }
}

std::string expectation_table(const ExpectationReport& report) {
  std::string s;
  const bool exact = report.mode == ExpectationReport::Mode::exact;
  s += "mode: ";
  s += exact ? "exact (" + std::to_string(report.permutations) + " permutations)"
             : "monte_carlo (" + std::to_string(report.samples) + " samples, seed " +
                   std::to_string(report.seed) + ", " + report.rng + ")";
  s += "\nties: " + report.tie_rule + "\ninstance: " + report.instance_hash + "\n";
  char line[160];
  for (const auto& p : report.players) {
    if (exact)
      std::snprintf(line, sizeof(line), "  E[%s] = %s = %s\n", p.name.c_str(),
                    p.exact.to_string().c_str(), p.exact.to_decimal().c_str());
    else
      std::snprintf(line, sizeof(line), "  E[%s] = %s +- %s\n", p.name.c_str(),
                    format_double(p.mean).c_str(), format_double(p.stderr_).c_str());
    s += line;
  }
  if (exact)
    std::snprintf(line, sizeof(line), "  total = %s = %s\n", report.total_exact.to_string().c_str(),
                  report.total_exact.to_decimal().c_str());
  else
    std::snprintf(line, sizeof(line), "  total = %s +- %s\n", format_double(report.total_mean).c_str(),
                  format_double(report.total_stderr).c_str());
  s += line;
  if (report.opt) {
    std::snprintf(line, sizeof(line), "  opt = %lld (%s)\n",
                  static_cast<long long>(report.opt->welfare), report.opt->source.c_str());
    s += line;
    if (report.ratio_exact)
      std::snprintf(line, sizeof(line), "  ratio = %s = %s\n", report.ratio_exact->to_string().c_str(),
                    report.ratio_exact->to_decimal().c_str());
    else
      std::snprintf(line, sizeof(line), "  ratio = %s\n", format_double(*report.ratio).c_str());
    s += line;
  }
  return s;
}

std::string claims_table(const std::vector<ClaimReport>& reports) {
  std::string s = "claim               scope                  status   margin\n";
  char line[256];
  for (const auto& r : reports) {
    std::string status = claim_status_name(r.status);
    if (r.informational) status += " (info)";
    std::snprintf(line, sizeof(line), "%-19s %-22s %-8s %s\n", r.id.c_str(), r.scope.c_str(),
                  status.c_str(), r.margin ? r.margin->to_string().c_str() : "-");
    s += line;
    if (!r.note.empty()) s += "    note: " + r.note + "\n";
    if (r.witness) {
      s += "    witness: " + r.witness->detail;
      if (!r.witness->permutation.empty()) {
        s += " @ permutation ";
        for (std::size_t i = 0; i < r.witness->permutation.size(); ++i)
          s += (i ? "," : "") + std::to_string(r.witness->permutation[i]);
      }
      s += "\n";
    }
  }
  return s;
}

std::string run_table(const Instance& instance, const GreedyResult& result,
                      const std::vector<StepRecord>* steps) {
  std::string s;
  char line[256];
  s += "permutation:";
  for (int j : result.trace.permutation.order()) s += " " + std::to_string(j);
  s += "\nwelfare: " + std::to_string(result.allocation.welfare) + "\n";
  for (int i = 0; i < instance.player_count(); ++i) {
    s += "  " + instance.player(i).name + " value " +
         std::to_string(result.trace.player_values[static_cast<std::size_t>(i)]) + ", items {";
    const auto items = result.allocation.bundles[static_cast<std::size_t>(i)].to_vector();
    for (std::size_t k = 0; k < items.size(); ++k) s += (k ? "," : "") + std::to_string(items[k]);
    s += "}\n";
  }
  if (steps) {
    s += "  t item winner gain  O(j) C(j)  v_O v_C  b_O b_C  loss OPT^t\n";
    for (const auto& st : *steps) {
      std::snprintf(line, sizeof(line), "%3d %4d %6d %4lld %5d %4d %4lld %3lld %4lld %3lld %5lld %5lld\n",
                    st.t, st.item, st.winner + 1, static_cast<long long>(st.gain), st.opt_owner + 1,
                    st.competitor + 1, static_cast<long long>(st.v_o), static_cast<long long>(st.v_c),
                    static_cast<long long>(st.b_o), static_cast<long long>(st.b_c),
                    static_cast<long long>(st.loss), static_cast<long long>(st.opt_residual));
      s += line;
    }
  }
  return s;
}

int cmd_generate(const std::string& family, int m, int n, double p, std::uint64_t seed,
                 const std::string& out_path, std::ostream& out) {
  const Instance instance = family == "paper" ? lower_bound_instance(m) : random_instance(n, m, p, seed);
  write_output(instance_to_json_text(instance), out_path, out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"random-order greedy allocation for combinatorial auctions with "
               "vertex-cover valuations"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "write an instance file");
  generate->require_subcommand(1);
  int gen_m = 0, gen_n = 3;
  double gen_p = 0.5;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  auto* gen_paper = generate->add_subcommand("paper", "the 3-player star-plus-matchings family");
  gen_paper->add_option("--m", gen_m, "item count, odd and >= 5")->required();
  gen_paper->add_option("--out", gen_out, "output path (default stdout)");
  auto* gen_random = generate->add_subcommand("random", "independent G(m,p) players");
  gen_random->add_option("--m", gen_m, "item count")->required();
  gen_random->add_option("--n", gen_n, "player count")->capture_default_str();
  gen_random->add_option("--p", gen_p, "edge probability")->capture_default_str();
  gen_random->add_option("--seed", gen_seed, "generation seed")->capture_default_str();
  gen_random->add_option("--out", gen_out, "output path (default stdout)");

  // run
  auto* run = app.add_subcommand("run", "one greedy run over a fixed or sampled order");
  InstanceSource run_source;
  run_source.attach(run);
  std::string run_perm;
  std::uint64_t run_seed = 0;
  bool run_seed_set = false;
  std::string run_ties = "lowest";
  std::uint64_t run_tie_seed = 0;
  bool run_trace = false;
  std::string run_format = "table", run_out;
  std::uint64_t run_opt_budget = kDefaultOptBudget;
  auto* perm_opt = run->add_option("--perm", run_perm, "comma-separated item order");
  run->add_option("--seed", run_seed, "sample the order with this seed")
      ->each([&](const std::string&) { run_seed_set = true; })
      ->excludes(perm_opt);
  run->add_option("--ties", run_ties, "lowest | random")->check(CLI::IsMember({"lowest", "random"}));
  run->add_option("--tie-seed", run_tie_seed, "seed of the random tie rule");
  run->add_flag("--trace", run_trace, "emit per-step proof quantities (needs the exact optimum)");
  run->add_option("--format", run_format, "table | json")->check(CLI::IsMember({"table", "json"}));
  run->add_option("--out", run_out, "output path (default stdout)");
  run->add_option("--opt-budget", run_opt_budget, "max assignments for the optimum search")
      ->capture_default_str();

  // expect
  auto* expect = app.add_subcommand("expect", "expected welfare, exact or sampled");
  InstanceSource expect_source;
  expect_source.attach(expect);
  std::string expect_mode = "exact";
  std::uint64_t expect_samples = 200'000, expect_seed = 1;
  std::string expect_ties = "lowest";
  std::uint64_t expect_tie_seed = 0;
  int expect_workers = 1;
  std::uint64_t expect_perm_budget = kDefaultPermBudget, expect_opt_budget = kDefaultOptBudget;
  std::string expect_format = "table", expect_out;
  expect->add_option("--mode", expect_mode, "exact | mc")->check(CLI::IsMember({"exact", "mc"}));
  expect->add_option("--samples", expect_samples, "monte carlo samples")->capture_default_str();
  expect->add_option("--seed", expect_seed, "monte carlo seed")->capture_default_str();
  expect->add_option("--ties", expect_ties, "lowest | random")
      ->check(CLI::IsMember({"lowest", "random"}));
  expect->add_option("--tie-seed", expect_tie_seed, "seed of the random tie rule");
  expect->add_option("--workers", expect_workers, "parallel workers")->capture_default_str();
  expect->add_option("--perm-budget", expect_perm_budget, "max permutations for exact mode")
      ->capture_default_str();
  expect->add_option("--opt-budget", expect_opt_budget, "max assignments for the optimum search")
      ->capture_default_str();
  expect->add_option("--format", expect_format, "table | json | csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  expect->add_option("--out", expect_out, "output path (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "check the proof inequalities on an instance");
  InstanceSource verify_source;
  verify_source.attach(verify);
  std::string verify_claims_list = "all";
  bool verify_strict = false;
  int verify_workers = 1;
  std::uint64_t verify_perm_budget = 40'320, verify_opt_budget = kDefaultOptBudget;
  std::string verify_format = "table", verify_out;
  std::uint64_t verify_tie_seed = 0;
  std::string verify_ties = "lowest";
  verify->add_option("--claims", verify_claims_list, "all or a comma list of claim ids")
      ->capture_default_str();
  verify->add_flag("--strict", verify_strict, "exit 3 if anything was skipped");
  verify->add_option("--workers", verify_workers, "parallel workers")->capture_default_str();
  verify->add_option("--perm-budget", verify_perm_budget, "max permutations to enumerate")
      ->capture_default_str();
  verify->add_option("--opt-budget", verify_opt_budget, "max assignments for the optimum search")
      ->capture_default_str();
  verify->add_option("--ties", verify_ties, "lowest | random")
      ->check(CLI::IsMember({"lowest", "random"}));
  verify->add_option("--tie-seed", verify_tie_seed, "seed of the random tie rule");
  verify->add_option("--format", verify_format, "table | json")
      ->check(CLI::IsMember({"table", "json"}));
  verify->add_option("--out", verify_out, "output path (default stdout)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "ratio table over a family of sizes");
  std::string sweep_family = "paper";
  std::string sweep_m_list;
  std::string sweep_mode = "auto";
  std::uint64_t sweep_samples = 200'000, sweep_seed = 1;
  int sweep_n = 3, sweep_workers = 1;
  double sweep_p = 0.5;
  std::uint64_t sweep_gen_seed = 1;
  std::uint64_t sweep_perm_budget = kDefaultPermBudget, sweep_opt_budget = kDefaultOptBudget;
  std::string sweep_out;
  sweep->add_option("--family", sweep_family, "paper | random")
      ->check(CLI::IsMember({"paper", "random"}))
      ->capture_default_str();
  sweep->add_option("--m-list", sweep_m_list, "comma-separated item counts")->required();
  sweep->add_option("--mode", sweep_mode, "auto | exact | mc")
      ->check(CLI::IsMember({"auto", "exact", "mc"}))
      ->capture_default_str();
  sweep->add_option("--samples", sweep_samples, "monte carlo samples")->capture_default_str();
  sweep->add_option("--seed", sweep_seed, "monte carlo seed")->capture_default_str();
  sweep->add_option("--n", sweep_n, "player count (random family)")->capture_default_str();
  sweep->add_option("--p", sweep_p, "edge probability (random family)")->capture_default_str();
  sweep->add_option("--gen-seed", sweep_gen_seed, "seed of the random family")->capture_default_str();
  sweep->add_option("--workers", sweep_workers, "parallel workers")->capture_default_str();
  sweep->add_option("--perm-budget", sweep_perm_budget, "max permutations for exact rows")
      ->capture_default_str();
  sweep->add_option("--opt-budget", sweep_opt_budget, "max assignments for the optimum search")
      ->capture_default_str();
  sweep->add_option("--out", sweep_out, "output path (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolName << " " << kToolVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (gen_paper->parsed()) return cmd_generate("paper", gen_m, 0, 0, 0, gen_out, out);
    if (gen_random->parsed())
      return cmd_generate("random", gen_m, gen_n, gen_p, gen_seed, gen_out, out);

    if (run->parsed()) {
      const Instance instance = run_source.resolve();
      const TieRule rule = resolve_tie_rule(run_ties, run_tie_seed);
      Permutation sigma = [&] {
        if (!run_perm.empty()) {
          try {
            return Permutation(parse_int_list(run_perm, "--perm"));
          } catch (const std::invalid_argument&) {
            throw std::invalid_argument("--perm is not a permutation of 1.." +
                                        std::to_string(instance.item_count()));
          }
        }
        if (run_seed_set) return random_permutation(instance.item_count(), run_seed);
        throw std::invalid_argument("run needs --perm or --seed");
      }();
      const GreedyResult result = run_greedy(instance, sigma, rule);
      std::vector<StepRecord> steps;
      const std::vector<StepRecord>* steps_ptr = nullptr;
      if (run_trace) {
        OptResult opt;
        try {
          opt = brute_force_opt(instance, run_opt_budget);
        } catch (const BudgetError& e) {
          throw std::invalid_argument(std::string("--trace needs the exact optimum: ") + e.what());
        }
        steps = annotate_run(instance, sigma, rule, opt).steps;
        steps_ptr = &steps;
      }
      if (run_format == "json") {
        ordered_json j = run_report_json(instance, result, rule.describe(), steps_ptr);
        if (run_seed_set) j["seed"] = run_seed;
        write_output(j.dump(2) + "\n", run_out, out);
      } else {
        write_output(run_table(instance, result, steps_ptr), run_out, out);
      }
      return 0;
    }

    if (expect->parsed()) {
      const Instance instance = expect_source.resolve();
      const TieRule rule = resolve_tie_rule(expect_ties, expect_tie_seed);
      const std::optional<OptInfo> opt = compute_opt(instance, expect_source, expect_opt_budget);
      const ExpectationReport report =
          expect_mode == "exact"
              ? exact_expectation(instance, rule, expect_perm_budget, opt, expect_workers)
              : monte_carlo(instance, rule, expect_samples, expect_seed, opt, expect_workers);
      if (expect_format == "json")
        write_output(expectation_report_json(report).dump(2) + "\n", expect_out, out);
      else if (expect_format == "csv")
        write_output(expectation_report_csv(report), expect_out, out);
      else
        write_output(expectation_table(report), expect_out, out);
      return 0;
    }

    if (verify->parsed()) {
      const Instance instance = verify_source.resolve();
      VerifyConfig config;
      config.perm_budget = verify_perm_budget;
      config.opt_budget = verify_opt_budget;
      config.workers = verify_workers;
      config.rule = resolve_tie_rule(verify_ties, verify_tie_seed);
      std::vector<ClaimReport> reports = verify_claims(instance, config);
      if (verify_claims_list != "all") {
        const auto wanted = [&] {
          std::vector<std::string> ids;
          std::stringstream ss(verify_claims_list);
          std::string token;
          while (std::getline(ss, token, ',')) ids.push_back(token);
          return ids;
        }();
        std::vector<ClaimReport> filtered;
        for (const auto& id : wanted) {
          bool found = false;
          for (auto& r : reports)
            if (r.id == id) {
              filtered.push_back(r);
              found = true;
            }
          if (!found) throw std::invalid_argument("unknown claim id: " + id);
        }
        reports = std::move(filtered);
      }
      const std::string hash = instance_hash(instance);
      if (verify_format == "json")
        write_output(claim_reports_json(hash, reports).dump(2) + "\n", verify_out, out);
      else
        write_output(claims_table(reports), verify_out, out);
      bool any_failed = false, any_skipped = false;
      for (const auto& r : reports) {
        if (r.informational) continue;
        any_failed = any_failed || r.status == ClaimStatus::failed;
        any_skipped = any_skipped || r.status == ClaimStatus::skipped;
      }
      if (any_failed) return 1;
      if (any_skipped && verify_strict) return 3;
      return 0;
    }

    if (sweep->parsed()) {
      const std::vector<int> m_values = parse_int_list(sweep_m_list, "--m-list");
      SweepConfig config;
      config.mode = sweep_mode;
      config.samples = sweep_samples;
      config.seed = sweep_seed;
      config.perm_budget = sweep_perm_budget;
      config.opt_budget = sweep_opt_budget;
      config.workers = sweep_workers;
      std::function<Instance(int)> family;
      std::function<std::optional<std::int64_t>(int)> analytic;
      if (sweep_family == "paper") {
        family = [](int m) { return lower_bound_instance(m); };
        analytic = paper_family_opt;
      } else {
        family = [&](int m) { return random_instance(sweep_n, m, sweep_p, sweep_gen_seed); };
      }
      const std::vector<SweepRow> rows = ratio_sweep(family, m_values, config, analytic);
      write_output(sweep_csv(rows), sweep_out, out);
      return 0;
    }

    err << "error: no subcommand\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace rog
