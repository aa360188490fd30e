#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "zetanu/error.hpp"

namespace zetanu {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kLog2 = std::numbers::ln2;

/// Largest |Im(s)| accepted by the evaluators.
inline constexpr double kMaxImag = 2.0e4;

inline bool is_finite(cplx s) { return std::isfinite(s.real()) && std::isfinite(s.imag()); }

inline void require_finite(cplx s, const char* where) {
  if (!is_finite(s)) fail(Errc::invalid_argument, std::string(where) + ": non-finite argument");
}

/// Axis-aligned box in the s-plane, sigma horizontal and t vertical.
struct Rectangle {
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  double t_min = 0.0;
  double t_max = 0.0;

  double width() const { return sigma_max - sigma_min; }
  double height() const { return t_max - t_min; }
  double perimeter() const { return 2.0 * (width() + height()); }
  double diameter() const { return std::hypot(width(), height()); }
  cplx center() const { return {0.5 * (sigma_min + sigma_max), 0.5 * (t_min + t_max)}; }
  bool valid() const {
    return std::isfinite(sigma_min) && std::isfinite(sigma_max) && std::isfinite(t_min) &&
           std::isfinite(t_max) && sigma_max > sigma_min && t_max > t_min;
  }
  bool contains(cplx s, double slack = 0.0) const {
    return s.real() >= sigma_min - slack && s.real() <= sigma_max + slack &&
           s.imag() >= t_min - slack && s.imag() <= t_max + slack;
  }
  /// Distance from s to the boundary polygon (0 when s lies on it).
  double boundary_distance(cplx s) const;
};

inline double Rectangle::boundary_distance(cplx s) const {
  const double x = s.real(), y = s.imag();
  const double cx = std::clamp(x, sigma_min, sigma_max);
  const double cy = std::clamp(y, t_min, t_max);
  if (cx != x || cy != y) return std::hypot(x - cx, y - cy);
  return std::min(std::min(x - sigma_min, sigma_max - x), std::min(y - t_min, t_max - y));
}

}  // namespace zetanu
