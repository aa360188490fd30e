#pragma once

#include <stdexcept>
#include <string>

namespace zetanu {

enum class Errc {
  invalid_argument,
  pole_at_one,
  range_exceeded,
  pole_at_nonpositive_integer,
  branch_tracking_failure,
  formula_mismatch,
  out_of_range,
  outside_regime,
  boundary_too_close,
  sampling_not_converged,
  max_depth_exceeded,
  divergent,
  certificate_failed,
  constant_violated,
  singular_system,
  step_too_coarse,
  budget_exceeded,
  io_error,
};

const char* to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace zetanu
