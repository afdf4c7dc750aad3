#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "io.hpp"

namespace npick {

struct CheckResult {
  std::string name;
  std::string anchor;  // identity or inequality the check exercises
  bool pass = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct CriterionResult {
  int index = 0;
  std::string title;
  std::vector<CheckResult> checks;
  double wall_seconds = 0.0;
  bool pass() const;
};

struct RunReport {
  std::string recipe;
  std::uint64_t seed = 0;
  int budget = 1;
  std::vector<CriterionResult> criteria;
  double wall_seconds = 0.0;
  bool all_pass() const;
  std::string first_failing_anchor() const;
};

// budget 0 runs reduced sample counts (same tolerances); budget >= 1 runs the
// full counts.
CriterionResult run_criterion(int index, std::uint64_t seed, int budget);

const std::vector<std::string>& recipe_names();
std::vector<int> recipe_criteria(const std::string& recipe);
RunReport run_recipe(const std::string& recipe, std::uint64_t seed, int budget);

Json run_report_to_json(const RunReport& report);

}  // namespace npick
