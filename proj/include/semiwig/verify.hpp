#pragma once

#include <string>
#include <vector>

namespace semiwig {

struct CriterionResult {
  int id = 0;
  std::string name;
  double measured = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 13;

// criteria ids belonging to a suite; throws Errc::config on unknown names
std::vector<int> suite_criteria(const std::string& suite);
const std::vector<std::string>& suite_names();

CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_suite(const std::string& suite);

}  // namespace semiwig
