#pragma once

#include "zetanu/special.hpp"

namespace zetanu {

enum class NuMethod { direct, reflected_fe, series_tail };

/// Which case of the growth estimate the point falls in.
enum class GrowthRegion { absolutely_convergent, critical_strip, reflected_left };

const char* to_string(NuMethod m) noexcept;
const char* to_string(GrowthRegion r) noexcept;

struct NuValue {
  cplx nu{};
  cplx log2nd{};  // (zeta'/zeta)' = nu / zeta^2
  NuMethod method = NuMethod::direct;
  GrowthRegion region = GrowthRegion::critical_strip;
};

/// nu(s) = zeta(s) zeta''(s) - zeta'(s)^2. Direct for Re(s) >= 1/2; for Re(s) < 1/2 the
/// differentiated functional equation
///   nu(s) = chi(s)^2 (nu(1-s) + (psi'(1-s) - (pi/2)^2 csc^2(pi s/2)) zeta(1-s)^2).
NuValue nu(cplx s, const EvalOptions& opts = {});

/// nu via Euler-Maclaurin at s itself, whatever Re(s) is.
cplx nu_direct(cplx s, const EvalOptions& opts = {});

/// psi'(1-s) - (pi/2)^2 csc^2(pi s/2), the bracket weight in the reflected formula.
cplx reflection_weight(cplx s);

/// |LHS - RHS| / (|LHS| + |RHS|) of the differentiated functional equation, both sides direct.
double fe_residual(cplx s);

/// Same measure for (zeta'/zeta)'(1-s) = -(pi^2/4) sec^2(pi s/2) + psi'(s) + (zeta'/zeta)'(s).
double reflected_identity_residual(cplx s);

enum class AsymptoticRegime { dyadic, reciprocal };

struct AsymptoticEstimate {
  cplx value{};
  AsymptoticRegime regime = AsymptoticRegime::dyadic;
  cplx dyadic_term{};      // log(2)^2 / 2^s
  cplx reciprocal_term{};  // 1/s
  /// Size of the neglected terms: e^{-sigma}/(sigma-1-eps) + 1/|s| (dyadic) or 1/|s|^2.
  double error_scale = 0.0;
};

/// Two-regime approximation of (zeta'/zeta)'(1-s) for Re(s) > 1 + eps. The 1/s regime applies
/// when |s|^2 < 2^sigma. The dyadic error term is taken in magnitude as
/// e^{-sigma}/(sigma - 1 - eps).
AsymptoticEstimate log2nd_asymptotic(cplx s, double eps = 0.05);

}  // namespace zetanu
