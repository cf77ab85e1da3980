#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "semiwig/solver.hpp"
#include "semiwig/wigner.hpp"

namespace semiwig {

// amplitude: bump | gaussian | one, centred at `center` with half-width `width`
// phase: quad_plus | quad_minus | cubic | custom (coefficients c_k of x^k)
struct DatumSpec {
  std::string amplitude = "bump";
  std::string phase = "quad_plus";
  double center = 0.0;
  double width = 1.0;
  std::vector<double> coefficients;
};

struct Scenario {
  double eps = 0.5;
  std::vector<int> modes;          // equal-weight superposition, or the modes `eigen` tabulates
  std::optional<DatumSpec> datum;  // takes precedence over modes in `solve`
  int n_max = -1;                  // -1: default truncation
  PhaseSpaceGrid grid{-4, 4, -4, 4, 64, 64};
  std::string backend = "exact";
  std::vector<double> times{0.0};
  std::string prefix = "run";

  // throws Errc::config or the module error of the failing precondition
  void validate() const;
};

nlohmann::json to_json(const Scenario& s);
Scenario scenario_from_json(const nlohmann::json& j);
Scenario load_scenario(const std::filesystem::path& path);

InitialDatum make_datum(const DatumSpec& d, double eps);

}  // namespace semiwig
