#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zetanu/stencil.hpp"
#include "zetanu/zeros.hpp"

namespace zetanu {

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  bool operator==(const Rgb&) const = default;
};

/// HSV -> 8-bit RGB. h in [0, 1) is split into six sectors by floor(6h); with f the fractional
/// part, p = v(1-s), q = v(1-sf), u = v(1-s(1-f)); sectors 0..5 give (v,u,p), (q,v,p), (p,v,u),
/// (p,q,v), (u,p,v), (v,p,q). Channels are lround(255 * value).
Rgb hsv_to_rgb(double h, double s, double v);

/// (arg z + pi)/(2 pi), folded into [0, 1).
double phase_hue(cplx z);

/// One pixel per lattice point, row 0 at the top (t_max). Non-finite values are black.
struct PhaseImage {
  std::int64_t width = 0;
  std::int64_t height = 0;
  Rectangle rect;
  double h = 0.0;
  std::vector<Rgb> pixels;
  std::vector<ZeroRecord> overlay;

  Rgb& at(std::int64_t row, std::int64_t col) { return pixels[static_cast<std::size_t>(row * width + col)]; }
  const Rgb& at(std::int64_t row, std::int64_t col) const {
    return pixels[static_cast<std::size_t>(row * width + col)];
  }
};

/// Colours the (zeta'/zeta)' field of a grid.
PhaseImage phase_image(const NuGrid& g, bool parallel = true);

/// Colours an arbitrary function on the same lattice layout (test patterns).
PhaseImage phase_image_of(const ComplexFn& f, const Rectangle& rect, double h, bool parallel = true);

/// Darkens every other pixel of the columns at sigma = 0 and sigma = 1.
void draw_guides(PhaseImage& img);

/// White crosses at the given zeros.
void draw_overlay(PhaseImage& img, const std::vector<ZeroRecord>& zeros);

struct PlotOptions {
  bool parallel = true;
  bool guides = true;
  double probe_tolerance = 1e-4;
  std::int64_t max_pixels = 10'000'000;
};

struct PhasePlot {
  NuGrid grid;
  PhaseImage image;
};

/// Grid at h = 1/px_per_unit (so px_per_unit >= 10), coloured, with guides.
PhasePlot phase_plot(const Rectangle& rect, double px_per_unit, const PlotOptions& opts = {});

void write_ppm(const PhaseImage& img, const std::string& path);

struct Signature {
  std::int64_t row = 0;  // lattice cell: corners (row, col) .. (row+1, col+1), row 0 at t_min
  std::int64_t col = 0;
  cplx center{};
  int winding = 0;
};

/// Cells whose four corners wind around 0 (argument increments folded to (-pi, pi]).
std::vector<Signature> cell_signatures(const std::vector<cplx>& field, const NuGrid& g);

struct SignatureCensus {
  std::int64_t records = 0;         // zeros away from the image border
  std::int64_t zero_cells = 0;      // +1 cells away from the border
  std::int64_t matched = 0;         // records paired one-to-one with a +1 cell (same or adjacent)
  std::int64_t other_cells = 0;     // cells with winding other than 0 or +1
  bool equivalent = false;
};

/// Compares +1 signatures of nu on the grid with localized zeros, ignoring the outer cell ring.
SignatureCensus compare_signatures(const NuGrid& g, const std::vector<ZeroRecord>& zeros);

/// Re((zeta'/zeta)'(1 + 2it)) at `samples` evenly spaced t in [t_lo, t_hi], t_lo >= 0.5.
std::vector<std::pair<double, double>> resurgence_curve(double t_lo, double t_hi, int samples);

void write_curve_csv(const std::vector<std::pair<double, double>>& curve, const std::string& path);

/// Interior local extrema (t values) of a sampled curve.
std::vector<double> local_extrema(const std::vector<std::pair<double, double>>& curve);

}  // namespace zetanu
