#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "zetanu/nu.hpp"

namespace zetanu {

using ComplexFn = std::function<cplx(cplx)>;

struct WindingOptions {
  /// Segments shorter than this that still turn by >= pi/2 mean a zero or pole sits on the edge.
  double min_segment = 1e-6;
  std::int64_t max_evaluations = 2'000'000;
  int max_perturbations = 5;
};

struct WindingResult {
  int winding = 0;
  /// The rectangle actually integrated over (moved outward if the original grazed a zero).
  Rectangle rect;
  int perturbations = 0;
  std::int64_t evaluations = 0;
};

/// (1/2pi) * total change of arg f around the positively oriented boundary. Sampling starts at
/// max(0.05, perimeter/400) and bisects until every step turns the argument by less than pi/2.
WindingResult winding_of(const ComplexFn& f, const Rectangle& rect, const WindingOptions& opts = {});

/// Same, with the rectangle taken as given: throws boundary_too_close instead of perturbing.
WindingResult winding_fixed(const ComplexFn& f, const Rectangle& rect,
                            const WindingOptions& opts = {});

/// Winding of nu, counted as zeros minus 4 for the pole at s = 1. Sampling runs on the pole-free
/// nu (s-1)^4; a boundary within 1e-3 of s = 1 is moved outward first.
WindingResult nu_winding(const Rectangle& rect, const WindingOptions& opts = {});
int winding(const Rectangle& rect);

enum class ZeroKind { nontrivial, trivial_first_kind, trivial_second_kind, zeta_multiple_suspect };
const char* to_string(ZeroKind k) noexcept;

struct ZeroRecord {
  cplx location{};
  ZeroKind kind = ZeroKind::nontrivial;
  int winding = 1;
  double newton_residual = 0.0;  // |nu(location)|
  double local_scale = 0.0;      // |zeta zeta''| + |zeta'|^2 at the location
  std::optional<int> predicted_from;
};

struct LocalizeOptions {
  bool parallel = true;
  int max_depth = 48;
  /// Boxes with winding >= 2 below this diameter are reported as multiple-zero suspects.
  double cluster_diameter = 1e-6;
  double newton_h = 1e-3;
  double newton_tol = 1e-8;  // relative to the local scale
  int newton_max_iter = 40;
  std::uint64_t seed = 2024;
  WindingOptions winding;
};

struct LocalizeResult {
  std::vector<ZeroRecord> zeros;  // sorted by (Im, Re)
  Rectangle rect;                 // outer rectangle actually used
  int outer_winding = 0;
  std::int64_t boxes = 0;
  std::int64_t evaluations = 0;
};

/// Subdivision over winding numbers (elongated boxes are halved across their long side, others
/// quartered at jittered cut lines), Newton on nu once a box has winding 1.
LocalizeResult localize(const Rectangle& rect, const LocalizeOptions& opts = {});

/// Newton on nu with the stencil derivative. Returns nullopt if it stalls or diverges.
std::optional<ZeroRecord> newton_refine(cplx start, const LocalizeOptions& opts = {});

struct FirstKindPrediction {
  int n = 0;
  double t_pred = 0.0;
  double sigma_pred = 0.0;  // real part of the predicted zero of nu, i.e. 1 - sigma of the model
};

/// Zeros of 1/u + log(2)^2 2^{-u} (the two-term model of (zeta'/zeta)' at 1 - s), one per n with
/// seed t = (2 pi n + 3 pi/2)/log 2, refined by Newton and reflected to the s-plane.
std::vector<FirstKindPrediction> predict_first_kind(double t_lo, double t_hi);

/// The model zero for index n.
FirstKindPrediction predict_first_kind_n(int n);

/// Seed ordinate (2 pi n + 3 pi/2)/log 2 and the rounded linear form 9.1 n + 6.8.
double first_kind_seed(int n);

struct ClassifyRadii {
  double first_kind = 1.5;
  double second_kind = 2.0;
};

ZeroKind classify(cplx s, std::optional<int>* predicted_from = nullptr, const ClassifyRadii& r = {});

/// 2(T/2pi log(T/2pi) - T/2pi) - (log 2/pi) T.
double count_formula(double T);

/// Census rectangle [-4, 4.3] x [t_floor, T]; t_floor keeps the real axis off the boundary.
inline constexpr double kCensusSigmaMin = -4.0;
inline constexpr double kCensusSigmaMax = 4.3;
inline constexpr double kCensusTFloor = 0.01;

struct CensusReport {
  double T = 0.0;
  std::int64_t n_computed = 0;
  double n_formula = 0.0;
  double residual = 0.0;
};

CensusReport census_compare(double T, const LocalizeOptions& opts = {});

/// Census from records already localized over a census rectangle reaching at least T.
CensusReport census_from(const std::vector<ZeroRecord>& zeros, double T);

/// Zeros with Re > 5/6 + delta and |Im| <= T (upper half doubled by conjugation).
std::int64_t density_count(double T, double delta, const LocalizeOptions& opts = {});
std::int64_t density_from(const std::vector<ZeroRecord>& zeros, double T, double delta);

}  // namespace zetanu
