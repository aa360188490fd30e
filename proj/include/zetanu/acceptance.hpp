#pragma once

#include <functional>
#include <string>
#include <vector>

namespace zetanu {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  bool parallel = true;
  /// Figures are written here when nonempty (fig1.csv, fig2.ppm, fig3.ppm).
  std::string output_dir;
  /// Criterion ids to run; empty runs all twelve.
  std::vector<int> only;
};

/// Runs the acceptance checks in order. `on_result` sees each row as soon as it is known.
/// Library errors inside a check turn that row red with the message as detail.
std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& opts = {},
    const std::function<void(const CriterionResult&)>& on_result = {});

/// "[PASS]  7  counting formula  (1.6 s)  detail"
std::string format_row(const CriterionResult& r);

}  // namespace zetanu
