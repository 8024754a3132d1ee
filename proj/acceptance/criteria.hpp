#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qmt/limits.hpp"

namespace qmt::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool correct = false;
  double seconds = 0;
  double budget_seconds = 0;
  std::string detail;

  bool passed() const { return correct && seconds < budget_seconds; }
};

// Runs the criteria in order; `only` restricts to the listed ids when nonempty.
std::vector<CriterionResult> run_criteria(const Limits& limits, const std::vector<int>& only = {});

// "PASS  3  H_eps for 1000 fair tosses  [0.41 s / 5 s]  detail"
std::string format_line(const CriterionResult& r);

}  // namespace qmt::acceptance
