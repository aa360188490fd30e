#include "zetanu/nu.hpp"

#include <limits>

namespace zetanu {

const char* to_string(NuMethod m) noexcept {
  switch (m) {
    case NuMethod::direct: return "direct";
    case NuMethod::reflected_fe: return "reflected_fe";
    case NuMethod::series_tail: return "series_tail";
  }
  return "?";
}

const char* to_string(GrowthRegion r) noexcept {
  switch (r) {
    case GrowthRegion::absolutely_convergent: return "absolutely_convergent";
    case GrowthRegion::critical_strip: return "critical_strip";
    case GrowthRegion::reflected_left: return "reflected_left";
  }
  return "?";
}

namespace {

GrowthRegion region_of(cplx s) {
  if (s.real() > 1.0) return GrowthRegion::absolutely_convergent;
  if (s.real() < 0.0) return GrowthRegion::reflected_left;
  return GrowthRegion::critical_strip;
}

cplx nu_of(const EvalBundle& b) { return b.zeta * b.zeta2 - b.zeta1 * b.zeta1; }

// Distance from s to the nearest negative even integer (double poles of the weight).
double distance_to_trivial_zero(cplx s) {
  const double k = std::round(-0.5 * s.real());
  if (k < 1.0) return std::numeric_limits<double>::infinity();
  return std::abs(s + 2.0 * k);
}

}  // namespace

cplx reflection_weight(cplx s) { return trigamma(1.0 - s) - 0.25 * kPi * kPi * csc2_half_pi(s); }

NuValue nu(cplx s, const EvalOptions& opts) {
  require_finite(s, "nu");
  if (s == cplx(1.0, 0.0)) fail(Errc::pole_at_one, "nu");
  NuValue out;
  out.region = region_of(s);

  const bool direct = s.real() >= 0.5 || s == cplx(0.0, 0.0) || distance_to_trivial_zero(s) < 1e-9;
  if (direct) {
    const EvalBundle b = zeta_derivs(s, 2, opts);
    out.nu = nu_of(b);
    out.log2nd = out.nu / (b.zeta * b.zeta);
    out.method = b.method == EvalMethod::dirichlet_series ? NuMethod::series_tail : NuMethod::direct;
    return out;
  }

  const cplx u = 1.0 - s;
  const EvalBundle b = zeta_derivs(u, 2, opts);
  const cplx nu_u = nu_of(b);
  const cplx w = reflection_weight(s);
  const cplx zu2 = b.zeta * b.zeta;
  out.nu = std::exp(2.0 * log_chi(s)) * (nu_u + w * zu2);
  out.log2nd = nu_u / zu2 + w;
  out.method = NuMethod::reflected_fe;
  return out;
}

cplx nu_direct(cplx s, const EvalOptions& opts) { return nu_of(zeta_derivs_em(s, 2, opts)); }

double fe_residual(cplx s) {
  require_finite(s, "fe_residual");
  const cplx u = 1.0 - s;
  const EvalBundle bs = zeta_derivs_em(s, 2);
  const EvalBundle bu = zeta_derivs_em(u, 2);
  const cplx lhs = nu_of(bs);
  const cplx rhs = std::exp(2.0 * log_chi(s)) * (nu_of(bu) + reflection_weight(s) * bu.zeta * bu.zeta);
  return std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs));
}

double reflected_identity_residual(cplx s) {
  require_finite(s, "reflected_identity_residual");
  const EvalBundle bs = zeta_derivs_em(s, 2);
  const EvalBundle bu = zeta_derivs_em(1.0 - s, 2);
  const cplx lhs = nu_of(bu) / (bu.zeta * bu.zeta);
  const cplx rhs = -0.25 * kPi * kPi * sec2_half_pi(s) + trigamma(s) + nu_of(bs) / (bs.zeta * bs.zeta);
  return std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs));
}

AsymptoticEstimate log2nd_asymptotic(cplx s, double eps) {
  require_finite(s, "log2nd_asymptotic");
  const double sigma = s.real();
  if (!(eps > 0.0) || sigma <= 1.0 + eps) {
    fail(Errc::outside_regime, "log2nd_asymptotic needs Re(s) > 1 + eps");
  }
  AsymptoticEstimate e;
  e.dyadic_term = kLog2 * kLog2 * std::exp(-s * kLog2);
  e.reciprocal_term = 1.0 / s;
  const double mod2 = std::norm(s);
  if (mod2 < std::exp2(sigma)) {
    e.regime = AsymptoticRegime::reciprocal;
    e.value = e.reciprocal_term;
    e.error_scale = 1.0 / mod2;
  } else {
    e.regime = AsymptoticRegime::dyadic;
    e.value = e.dyadic_term;
    e.error_scale = std::exp(-sigma) / (sigma - 1.0 - eps) + 1.0 / std::sqrt(mod2);
  }
  return e;
}

}  // namespace zetanu
