#pragma once

#include <string>
#include <vector>

#include "hring/analysis.hpp"
#include "hring/model.hpp"

namespace hring {

enum class Status { pass, fail, not_applicable };

std::string to_string(Status s);

/// Verdict of one checker. Tier 1 checks are consequences of the enforced
/// axioms and must never fail on a valid configuration; tier 2 probes encode
/// facts whose proofs may need more than the axiom set, so a miss is flagged
/// rather than failed.
struct CheckResult {
  std::string check_id;
  int tier = 1;
  Status status = Status::not_applicable;
  nlohmann::ordered_json witness = nlohmann::ordered_json::object();
  std::string message;
  bool flagged = false;  // a tier 2 clause did not hold
};

// All checkers below require a valid configuration. The single-argument forms
// validate first and throw ContractViolation otherwise; the two-argument forms
// trust the caller and reuse an existing summary.

CheckResult check_chain_properties(const Configuration& c, const AnalysisSummary& s);
CheckResult check_counting_lemmas(const Configuration& c, const AnalysisSummary& s);
CheckResult check_independent_chains(const Configuration& c, const AnalysisSummary& s);
CheckResult check_lower_bound(const Configuration& c, const AnalysisSummary& s);
CheckResult check_equality(const Configuration& c, const AnalysisSummary& s);
CheckResult check_fatou_period(const Configuration& c, const AnalysisSummary& s);

CheckResult check_chain_properties(const Configuration& c);
CheckResult check_counting_lemmas(const Configuration& c);
CheckResult check_independent_chains(const Configuration& c);
CheckResult check_lower_bound(const Configuration& c);
CheckResult check_equality(const Configuration& c);
CheckResult check_fatou_period(const Configuration& c);

/// Tier 2 probe for the smallest periods: p = 3 gives h = n = l = 2 and
/// p = 4 gives l = 3, h = 2, n in {2, 3}. Not applicable for other periods.
CheckResult probe_small_period(const Configuration& c, const AnalysisSummary& s);

struct CheckReport {
  bool rejected = false;  // configuration failed validation
  ViolationReport violations;
  std::vector<CheckResult> results;

  /// False iff rejected or some tier 1 result failed.
  bool pass() const;
  bool flagged() const;
};

/// Validates, then runs the six checkers in fixed order.
CheckReport run_all(const Configuration& c, ValidateOptions opts = {});
/// Runs the checkers on a configuration already known to be valid.
std::vector<CheckResult> run_checks(const Configuration& c, const AnalysisSummary& s);

/// p >= h(h+1)/2 when the basic nest surrounds a pole, else p >= h(h+3)/2.
int period_lower_bound(int h, bool basic_nest_has_pole);

nlohmann::ordered_json to_json(const CheckResult& r);
nlohmann::ordered_json to_json(const CheckReport& r);

}  // namespace hring
