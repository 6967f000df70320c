// Pass/fail reports for verification suites.
#pragma once

#include <map>
#include <string>
#include <vector>

namespace voamat {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // counterexample / witness payload, empty when passing
};

struct Report {
  std::string suite;
  bool pass = true;
  std::vector<CheckResult> checks;
  std::map<std::string, std::string> meta;  // cutoffs, instance parameters
  // Cap on recorded failures so a broken build does not produce gigabytes.
  static constexpr int kMaxFailures = 25;
  int suppressed_failures = 0;

  void add(const std::string& name, bool ok, const std::string& detail = "") {
    if (!ok) {
      pass = false;
      int failures = 0;
      for (const auto& c : checks)
        if (!c.pass) ++failures;
      if (failures >= kMaxFailures) {
        ++suppressed_failures;
        return;
      }
    }
    checks.push_back({name, ok, ok ? "" : detail});
  }

  int passed_count() const {
    int n = 0;
    for (const auto& c : checks)
      if (c.pass) ++n;
    return n;
  }

  std::string first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return c.name + (c.detail.empty() ? "" : (": " + c.detail));
    return "";
  }
};

}  // namespace voamat
