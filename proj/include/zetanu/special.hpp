#pragma once

#include <array>
#include <span>
#include <vector>

#include "zetanu/types.hpp"

namespace zetanu {

enum class EvalMethod { euler_maclaurin, dirichlet_series, reflected, stencil };
const char* to_string(EvalMethod m) noexcept;

/// zeta and its first two derivatives at one point.
struct EvalBundle {
  cplx zeta{};
  cplx zeta1{};
  cplx zeta2{};
  EvalMethod method = EvalMethod::euler_maclaurin;
  /// Heuristic: magnitude of the last retained correction plus a rounding estimate.
  double est_abs_err = 0.0;
};

struct EvalOptions {
  /// Euler-Maclaurin truncation point; 0 selects max(ceil(|t|/2) + 20, 50).
  int em_truncation = 0;
  /// Number of Bernoulli correction terms.
  int bernoulli_terms = 25;
  /// Allow plain Dirichlet summation when its rigorous tail bound needs fewer terms than EM.
  bool allow_series_shortcut = true;
};

struct ConstantsSet {
  /// bernoulli[k] = B_{2k+2}, i.e. B_2, B_4, ..., B_60.
  std::vector<double> bernoulli;
  /// Stieltjes constants; stieltjes[0] is Euler's constant.
  std::array<double, 3> stieltjes{};

  double B(int n) const;  // even n in [2, 60]
};

const ConstantsSet& constants();

/// Exact B_n for even n in [2, 60] as numerator/denominator strings (used by the table tests).
std::pair<std::string, std::string> bernoulli_rational(int n);

int default_truncation(double t);

/// Automatic method choice: Euler-Maclaurin (or the series shortcut) for Re(s) >= 0,
/// the functional equation otherwise.
EvalBundle zeta_derivs(cplx s, int order = 2, const EvalOptions& opts = {});

/// Forces the direct Euler-Maclaurin route regardless of Re(s). Extended precision is used
/// when Re(s) < 0, where the partial sums are large compared to the result.
EvalBundle zeta_derivs_em(cplx s, int order = 2, const EvalOptions& opts = {});

cplx zeta(cplx s, const EvalOptions& opts = {});

cplx log_gamma(cplx z);
cplx digamma(cplx z);
cplx trigamma(cplx z);

/// log chi(s) from the Gamma-quotient form. Any branch; use log_chi_path for continuity.
cplx log_chi(cplx s);
cplx chi(cplx s);

/// Continuous branch of log chi along the given path.
std::vector<cplx> log_chi_path(std::span<const cplx> path);

/// chi and its first two derivatives, stable for large |t|.
struct ChiDerivs {
  cplx chi, chi1, chi2;
};
ChiDerivs chi_derivs(cplx s);

// Overflow-free trigonometric squares at pi*s/2.
cplx csc2_half_pi(cplx s);
cplx sec2_half_pi(cplx s);
cplx cot_half_pi(cplx s);

}  // namespace zetanu
