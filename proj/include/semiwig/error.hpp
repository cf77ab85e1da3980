#pragma once

#include <stdexcept>
#include <string>

namespace semiwig {

enum class Errc {
  domain,
  capability,
  accuracy,
  degenerate,
  unsupported,
  turning_band,
  bracketing,
  flat_phase,
  grid_too_small,
  refused,
  wrong_branch,
  step,
  config,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& what, double estimate = 0.0)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c), estimate_(estimate) {}
  Errc code() const { return code_; }
  // achieved error estimate, only meaningful for Errc::accuracy
  double estimate() const { return estimate_; }

 private:
  Errc code_;
  double estimate_;
};

}  // namespace semiwig
