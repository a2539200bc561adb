#pragma once

#include <string>
#include <vector>

namespace popuc::cli {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". ConfigError on an unknown name.
std::vector<CheckResult> run_suite(const std::string& suite);

/// One "PASS|FAIL suite/name: detail" line per check.
std::string format_report(const std::vector<CheckResult>& results);

}  // namespace popuc::cli
