#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "rog/expectation.hpp"
#include "rog/instrumentation.hpp"

namespace rog {

// All serialization is key-ordered and formats floating-point values through
// one fixed code path, so identical inputs produce identical bytes.
using ordered_json = nlohmann::ordered_json;

std::string format_double(double v);  // %.12g

ordered_json rational_json(const Rational& r);

ordered_json expectation_report_json(const ExpectationReport& report);
std::string expectation_report_csv(const ExpectationReport& report);

const char* claim_status_name(ClaimStatus status);
ordered_json claim_reports_json(const std::string& instance_hash,
                                const std::vector<ClaimReport>& reports);

std::string sweep_csv(const std::vector<SweepRow>& rows);

ordered_json run_report_json(const Instance& instance, const GreedyResult& result,
                             const std::string& tie_rule,
                             const std::vector<StepRecord>* steps);

}  // namespace rog
