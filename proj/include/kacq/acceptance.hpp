#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace kacq {

struct CriterionResult {
  int id = 0;
  std::string suite;     // symbolic, brute, cross, hall
  std::string identity;  // what is compared
  bool checks_ok = false;
  double seconds = 0;
  double budget_seconds = 0;
  std::vector<std::string> notes;  // one line per sub-check, failures first
  bool pass() const { return checks_ok && seconds <= budget_seconds; }
};

struct AcceptanceOptions {
  std::set<std::string> suites;  // empty: all
  std::set<int> only;            // empty: all criteria of the selected suites
  int jobs = 1;
};

std::vector<std::string> acceptance_suites();
// runs criteria 1..11; `progress` is called after each one
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            const std::function<void(const CriterionResult&)>& progress = {});
std::string format_result(const CriterionResult& r);

}  // namespace kacq
