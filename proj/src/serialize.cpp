#include "rog/serialize.hpp"

#include <cstdio>

#include "rog/version.hpp"

namespace rog {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

ordered_json rational_json(const Rational& r) {
  ordered_json j;
  j["num"] = int128_to_string(r.num());
  j["den"] = int128_to_string(r.den());
  j["decimal"] = r.to_decimal();
  return j;
}

namespace {

ordered_json header_json() {
  ordered_json j;
  j["tool"] = std::string(kToolName) + " " + kToolVersion;
  return j;
}

}  // namespace

ordered_json expectation_report_json(const ExpectationReport& report) {
  ordered_json j = header_json();
  j["instance_hash"] = report.instance_hash;
  j["tie_rule"] = report.tie_rule;
  const bool exact = report.mode == ExpectationReport::Mode::exact;
  j["mode"] = exact ? "exact" : "monte_carlo";
  if (exact) {
    j["permutations"] = report.permutations;
    j["min_welfare"] = report.min_welfare;
  } else {
    j["samples"] = report.samples;
    j["seed"] = report.seed;
    j["rng"] = report.rng;
  }
  j["players"] = ordered_json::array();
  for (const auto& p : report.players) {
    ordered_json pj;
    pj["name"] = p.name;
    if (exact) {
      pj["expected"] = rational_json(p.exact);
    } else {
      pj["mean"] = format_double(p.mean);
      pj["stderr"] = format_double(p.stderr_);
    }
    j["players"].push_back(std::move(pj));
  }
  if (exact) {
    j["total"] = rational_json(report.total_exact);
  } else {
    j["total"] = ordered_json{{"mean", format_double(report.total_mean)},
                              {"stderr", format_double(report.total_stderr)}};
  }
  if (report.opt) {
    j["opt"] = ordered_json{{"welfare", report.opt->welfare}, {"source", report.opt->source}};
    if (report.ratio_exact)
      j["ratio"] = rational_json(*report.ratio_exact);
    else if (report.ratio)
      j["ratio"] = format_double(*report.ratio);
  }
  return j;
}

std::string expectation_report_csv(const ExpectationReport& report) {
  const bool exact = report.mode == ExpectationReport::Mode::exact;
  std::string csv = "entity,mode,value,stderr,num,den\n";
  auto row = [&](const std::string& entity, const Rational& r, double mean, double se) {
    csv += entity + ",";
    csv += exact ? "exact" : "mc";
    if (exact) {
      csv += "," + r.to_decimal() + ",0," + int128_to_string(r.num()) + "," + int128_to_string(r.den());
    } else {
      csv += "," + format_double(mean) + "," + format_double(se) + ",,";
    }
    csv += "\n";
  };
  for (const auto& p : report.players) row(p.name, p.exact, p.mean, p.stderr_);
  row("total", report.total_exact, report.total_mean, report.total_stderr);
  if (report.opt) {
    csv += "opt," + report.opt->source + "," + std::to_string(report.opt->welfare) + ",0,,\n";
    if (report.ratio_exact)
      row("ratio", *report.ratio_exact, *report.ratio, 0.0);
    else if (report.ratio)
      csv += "ratio,mc," + format_double(*report.ratio) + ",,,\n";
  }
  return csv;
}

const char* claim_status_name(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::held:
      return "held";
    case ClaimStatus::failed:
      return "failed";
    case ClaimStatus::skipped:
      return "skipped";
  }
  return "?";
}

ordered_json claim_reports_json(const std::string& hash, const std::vector<ClaimReport>& reports) {
  ordered_json j = header_json();
  j["instance_hash"] = hash;
  j["claims"] = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json cj;
    cj["claim"] = r.id;
    cj["scope"] = r.scope;
    cj["status"] = claim_status_name(r.status);
    cj["holds"] = r.holds;
    if (r.informational) cj["informational"] = true;
    if (r.margin) cj["margin"] = rational_json(*r.margin);
    if (r.witness) {
      ordered_json wj;
      if (!r.witness->instance_hash.empty()) wj["instance_hash"] = r.witness->instance_hash;
      if (!r.witness->permutation.empty()) wj["permutation"] = r.witness->permutation;
      if (r.witness->step) wj["step"] = r.witness->step;
      if (r.witness->item) wj["item"] = r.witness->item;
      wj["detail"] = r.witness->detail;
      cj["witness"] = std::move(wj);
    }
    if (!r.note.empty()) cj["note"] = r.note;
    j["claims"].push_back(std::move(cj));
  }
  return j;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string csv = "m,mode,e_rog,e_rog_stderr,opt,ratio,samples,seed,opt_source\n";
  for (const auto& r : rows) {
    csv += std::to_string(r.m) + "," + r.mode + ",";
    csv += r.e_rog_exact ? r.e_rog_exact->to_decimal() : format_double(r.e_rog);
    csv += "," + format_double(r.e_rog_stderr);
    csv += "," + std::to_string(r.opt_welfare);
    csv += "," + format_double(r.ratio);
    csv += "," + std::to_string(r.samples);
    csv += "," + std::to_string(r.seed);
    csv += "," + r.opt_source + "\n";
  }
  return csv;
}

ordered_json run_report_json(const Instance& instance, const GreedyResult& result,
                             const std::string& tie_rule, const std::vector<StepRecord>* steps) {
  ordered_json j = header_json();
  j["instance_hash"] = instance_hash(instance);
  j["tie_rule"] = tie_rule;
  j["permutation"] = result.trace.permutation.order();
  j["welfare"] = result.allocation.welfare;
  j["players"] = ordered_json::array();
  for (int i = 0; i < instance.player_count(); ++i) {
    ordered_json pj;
    pj["name"] = instance.player(i).name;
    pj["items"] = result.allocation.bundles[static_cast<std::size_t>(i)].to_vector();
    pj["value"] = result.trace.player_values[static_cast<std::size_t>(i)];
    j["players"].push_back(std::move(pj));
  }
  if (steps) {
    j["trace"] = ordered_json::array();
    for (const auto& s : *steps) {
      ordered_json sj;
      sj["t"] = s.t;
      sj["item"] = s.item;
      sj["opt_owner"] = s.opt_owner + 1;
      sj["competitor"] = s.competitor >= 0 ? ordered_json(s.competitor + 1) : ordered_json(nullptr);
      sj["v_o"] = s.v_o;
      sj["v_c"] = s.v_c;
      sj["b_o"] = s.b_o;
      sj["b_c"] = s.b_c;
      sj["winner"] = s.winner + 1;
      sj["gain"] = s.gain;
      sj["loss"] = s.loss;
      sj["opt_residual"] = s.opt_residual;
      j["trace"].push_back(std::move(sj));
    }
  }
  return j;
}

}  // namespace rog
