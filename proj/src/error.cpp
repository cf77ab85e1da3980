#include "semiwig/error.hpp"

namespace semiwig {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::domain: return "domain error";
    case Errc::capability: return "capability error";
    case Errc::accuracy: return "accuracy error";
    case Errc::degenerate: return "degenerate error";
    case Errc::unsupported: return "unsupported error";
    case Errc::turning_band: return "turning-band error";
    case Errc::bracketing: return "bracketing error";
    case Errc::flat_phase: return "flat-phase error";
    case Errc::grid_too_small: return "grid-too-small error";
    case Errc::refused: return "refused";
    case Errc::wrong_branch: return "wrong-branch error";
    case Errc::step: return "step error";
    case Errc::config: return "config error";
  }
  return "error";
}

}  // namespace semiwig
