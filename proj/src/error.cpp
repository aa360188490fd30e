#include "zetanu/error.hpp"

namespace zetanu {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::pole_at_one: return "pole_at_one";
    case Errc::range_exceeded: return "range_exceeded";
    case Errc::pole_at_nonpositive_integer: return "pole_at_nonpositive_integer";
    case Errc::branch_tracking_failure: return "branch_tracking_failure";
    case Errc::formula_mismatch: return "formula_mismatch";
    case Errc::out_of_range: return "out_of_range";
    case Errc::outside_regime: return "outside_regime";
    case Errc::boundary_too_close: return "boundary_too_close";
    case Errc::sampling_not_converged: return "sampling_not_converged";
    case Errc::max_depth_exceeded: return "max_depth_exceeded";
    case Errc::divergent: return "divergent";
    case Errc::certificate_failed: return "certificate_failed";
    case Errc::constant_violated: return "constant_violated";
    case Errc::singular_system: return "singular_system";
    case Errc::step_too_coarse: return "step_too_coarse";
    case Errc::budget_exceeded: return "budget_exceeded";
    case Errc::io_error: return "io_error";
  }
  return "unknown";
}

}  // namespace zetanu
