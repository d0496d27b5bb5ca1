// Acceptance driver: one PASS/FAIL line per criterion.
//   acceptance [--suite NAME]... [--only ID]... [--expect-fail ID]... [--verbose]
// Exit status is 0 when the set of failing criteria equals the --expect-fail set.
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>

#include "kacq/acceptance.hpp"
#include "kacq/errors.hpp"

int main(int argc, char** argv) {
  kacq::AcceptanceOptions opt;
  std::set<int> expect_fail;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    auto value = [&]() -> std::string {
      if (i + 1 >= argc) {
        std::cerr << "missing value for " << a << "\n";
        std::exit(2);
      }
      return argv[++i];
    };
    if (a == "--suite") {
      opt.suites.insert(value());
    } else if (a == "--only") {
      opt.only.insert(std::stoi(value()));
    } else if (a == "--expect-fail") {
      expect_fail.insert(std::stoi(value()));
    } else if (a == "--jobs") {
      opt.jobs = std::stoi(value());
    } else if (a == "--verbose") {
      verbose = true;
    } else {
      std::cerr << "unknown argument " << a << "\n";
      return 2;
    }
  }
  std::set<int> failed, ran;
  try {
    kacq::run_acceptance(opt, [&](const kacq::CriterionResult& r) {
      std::cout << kacq::format_result(r) << "\n";
      for (const auto& n : r.notes)
        if (verbose || n.rfind("MISMATCH", 0) == 0 || n.rfind("ERROR", 0) == 0 || n.rfind("info", 0) == 0)
          std::cout << "    " << n << "\n";
      std::cout.flush();
      ran.insert(r.id);
      if (!r.pass()) failed.insert(r.id);
    });
  } catch (const kacq::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  std::set<int> expected;
  for (int id : expect_fail)
    if (ran.count(id)) expected.insert(id);
  std::cout << ran.size() - failed.size() << "/" << ran.size() << " criteria pass";
  if (!expected.empty()) {
    std::cout << "; expected failures:";
    for (int id : expected) std::cout << " " << id;
  }
  std::cout << "\n";
  return failed == expected ? 0 : 1;
}
