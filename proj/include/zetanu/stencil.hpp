#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "zetanu/nu.hpp"

namespace zetanu {

/// Nine-point cell {0, +h, -h, +ih, -ih, h+ih, h-ih, -h+ih, -h-ih} with weights for f' and f''.
struct StencilScheme {
  double h = 0.0;
  std::array<cplx, 9> offsets{};
  std::array<cplx, 9> c1{};
  std::array<cplx, 9> c2{};
  /// Highest Taylor order j for which sum c * delta^j is matched exactly.
  int order = 8;

  cplx d1(const std::array<cplx, 9>& f) const;
  cplx d2(const std::array<cplx, 9>& f) const;
};

/// Solves the moment system at unit step, then rescales to h. Requires 1e-6 <= h <= 0.1.
StencilScheme build_stencil(double h);

/// max over j = 0..8 of |sum_k c_k delta_k^j - target_j| / max(1, |target_j|), for c1 and c2,
/// evaluated at unit step.
double moment_defect(const StencilScheme& s);

/// f' and f'' at z via the stencil.
std::pair<cplx, cplx> stencil_derivs(const StencilScheme& s, const std::function<cplx(cplx)>& f,
                                     cplx z);

/// Lattice field of nu and (zeta'/zeta)' over a rectangle, row-major with row 0 at t_min.
struct NuGrid {
  Rectangle rect;
  double h = 0.0;
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::vector<cplx> nu;
  std::vector<cplx> log2nd;
  /// zeta evaluations: one per lattice point, plus direct evaluations on the boundary ring
  /// and next to invalid points (the pole at s = 1).
  std::int64_t zeta_evaluations = 0;
  std::int64_t direct_evaluations = 0;

  cplx point(std::int64_t r, std::int64_t c) const {
    return {rect.sigma_min + static_cast<double>(c) * h, rect.t_min + static_cast<double>(r) * h};
  }
  std::size_t index(std::int64_t r, std::int64_t c) const {
    return static_cast<std::size_t>(r * cols + c);
  }
};

struct GridOptions {
  bool parallel = true;
  /// Random interior probes compared against direct evaluation; 0 disables the check.
  int probes = 20;
  double probe_tolerance = 1e-4;
  std::uint64_t seed = 12345;
  /// Hard cap on the number of lattice points.
  std::int64_t max_points = 20'000'000;
};

/// Rectangle sides must be integer multiples of h (to 1e-9 relative).
NuGrid grid_nu(const Rectangle& rect, double h, const GridOptions& opts = {});

struct ProbeReport {
  int probes = 0;
  double max_rel_err = 0.0;
};

/// Relative disagreement between grid values and direct nu at seeded random interior points.
ProbeReport probe_grid(const NuGrid& g, int probes, std::uint64_t seed);

/// Binary matrix file: u64 rows, u64 cols, 4 doubles rect, 1 double h, then per entry
/// nu.re, nu.im, log2nd.re, log2nd.im. All little-endian, row-major.
void write_grid(const NuGrid& g, const std::string& path);
NuGrid read_grid(const std::string& path);

struct OrderReport {
  std::vector<double> h;
  std::vector<double> err1;  // |stencil f' - f'|
  std::vector<double> err2;  // |stencil f'' - f''|
  double slope1 = 0.0;       // least-squares slope of log err against log h
  double slope2 = 0.0;
};

/// Convergence order of the stencil on f = exp at z, with weights and function values in
/// 50-digit arithmetic so truncation error is not masked by double rounding.
OrderReport stencil_order_exp(const std::vector<double>& hs, cplx z = {0.3, 0.2});

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace zetanu
