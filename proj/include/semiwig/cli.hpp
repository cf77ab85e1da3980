#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "semiwig/scenario.hpp"

namespace semiwig {

struct RunOptions {
  std::filesystem::path out = ".";
  std::optional<std::string> backend;  // overrides the scenario
};

std::vector<std::filesystem::path> cmd_eigen(const Scenario& s, const RunOptions& o);
std::vector<std::filesystem::path> cmd_solve(const Scenario& s, const RunOptions& o);
// appends one record per criterion to <out>/verify_report.jsonl; returns 0 or 1
int cmd_verify(const std::string& suite, const RunOptions& o, std::ostream& log);
std::filesystem::path cmd_bench(const RunOptions& o, std::ostream& log);

// full command line front end; exit codes 0 ok, 1 criterion failure, 2 usage or config error
int run_cli(int argc, char** argv);

}  // namespace semiwig
