#include "zetanu/plot.hpp"

#include <fstream>
#include <map>

namespace zetanu {

Rgb hsv_to_rgb(double h, double s, double v) {
  h -= std::floor(h);
  const double h6 = 6.0 * h;
  const int sector = std::min(5, static_cast<int>(std::floor(h6)));
  const double f = h6 - sector;
  const double p = v * (1.0 - s), q = v * (1.0 - s * f), u = v * (1.0 - s * (1.0 - f));
  double r = 0, g = 0, b = 0;
  switch (sector) {
    case 0: r = v, g = u, b = p; break;
    case 1: r = q, g = v, b = p; break;
    case 2: r = p, g = v, b = u; break;
    case 3: r = p, g = q, b = v; break;
    case 4: r = u, g = p, b = v; break;
    default: r = v, g = p, b = q; break;
  }
  auto ch = [](double x) { return static_cast<std::uint8_t>(std::lround(255.0 * std::clamp(x, 0.0, 1.0))); };
  return {ch(r), ch(g), ch(b)};
}

double phase_hue(cplx z) {
  const double hue = (std::arg(z) + kPi) / (2.0 * kPi);
  return hue >= 1.0 ? hue - 1.0 : hue;
}

namespace {

Rgb colour(cplx z) {
  if (!is_finite(z)) return {};
  return hsv_to_rgb(phase_hue(z), 1.0, 1.0);
}

PhaseImage blank(const Rectangle& rect, double h, std::int64_t rows, std::int64_t cols) {
  PhaseImage img;
  img.rect = rect;
  img.h = h;
  img.width = cols;
  img.height = rows;
  img.pixels.assign(static_cast<std::size_t>(rows * cols), Rgb{});
  return img;
}

}  // namespace

PhaseImage phase_image(const NuGrid& g, bool parallel) {
  PhaseImage img = blank(g.rect, g.h, g.rows, g.cols);
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t r = 0; r < g.rows; ++r) {
    for (std::int64_t c = 0; c < g.cols; ++c) img.at(g.rows - 1 - r, c) = colour(g.log2nd[g.index(r, c)]);
  }
  return img;
}

PhaseImage phase_image_of(const ComplexFn& f, const Rectangle& rect, double h, bool parallel) {
  if (!rect.valid() || !(h > 0.0)) fail(Errc::invalid_argument, "phase_image_of: bad lattice");
  const auto cols = static_cast<std::int64_t>(std::llround(rect.width() / h)) + 1;
  const auto rows = static_cast<std::int64_t>(std::llround(rect.height() / h)) + 1;
  PhaseImage img = blank(rect, h, rows, cols);
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t r = 0; r < rows; ++r) {
    for (std::int64_t c = 0; c < cols; ++c) {
      const cplx s(rect.sigma_min + c * h, rect.t_min + r * h);
      cplx v;
      try {
        v = f(s);
      } catch (const Error&) {
        v = cplx(std::nan(""), 0.0);
      }
      img.at(rows - 1 - r, c) = colour(v);
    }
  }
  return img;
}

void draw_guides(PhaseImage& img) {
  for (double sigma : {0.0, 1.0}) {
    const double x = (sigma - img.rect.sigma_min) / img.h;
    const auto c = static_cast<std::int64_t>(std::llround(x));
    if (c < 0 || c >= img.width || std::abs(x - c) > 0.5) continue;
    for (std::int64_t r = 0; r < img.height; r += 2) {
      Rgb& p = img.at(r, c);
      p = {static_cast<std::uint8_t>(p.r / 2), static_cast<std::uint8_t>(p.g / 2), static_cast<std::uint8_t>(p.b / 2)};
    }
  }
}

void draw_overlay(PhaseImage& img, const std::vector<ZeroRecord>& zeros) {
  const Rgb white{255, 255, 255};
  for (const auto& z : zeros) {
    const auto c = static_cast<std::int64_t>(std::llround((z.location.real() - img.rect.sigma_min) / img.h));
    const auto r = img.height - 1 - static_cast<std::int64_t>(std::llround((z.location.imag() - img.rect.t_min) / img.h));
    for (int d = -2; d <= 2; ++d) {
      if (r >= 0 && r < img.height && c + d >= 0 && c + d < img.width) img.at(r, c + d) = white;
      if (c >= 0 && c < img.width && r + d >= 0 && r + d < img.height) img.at(r + d, c) = white;
    }
    img.overlay.push_back(z);
  }
}

PhasePlot phase_plot(const Rectangle& rect, double px_per_unit, const PlotOptions& opts) {
  if (!(px_per_unit >= 10.0)) fail(Errc::invalid_argument, "phase_plot: px_per_unit must be at least 10");
  if (!rect.valid()) fail(Errc::invalid_argument, "phase_plot: empty rectangle");
  const double px = (rect.width() * px_per_unit + 1.0) * (rect.height() * px_per_unit + 1.0);
  if (px > static_cast<double>(opts.max_pixels)) {
    fail(Errc::budget_exceeded, "phase_plot: " + std::to_string(static_cast<long long>(px)) + " pixels");
  }
  GridOptions go;
  go.parallel = opts.parallel;
  go.probe_tolerance = opts.probe_tolerance;
  go.max_points = opts.max_pixels;
  PhasePlot out;
  out.grid = grid_nu(rect, 1.0 / px_per_unit, go);
  out.image = phase_image(out.grid, opts.parallel);
  if (opts.guides) draw_guides(out.image);
  return out;
}

void write_ppm(const PhaseImage& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot open " + path);
  out << "P6\n" << img.width << " " << img.height << "\n255\n";
  for (const Rgb& p : img.pixels) {
    const char px[3] = {static_cast<char>(p.r), static_cast<char>(p.g), static_cast<char>(p.b)};
    out.write(px, 3);
  }
  if (!out) fail(Errc::io_error, "write failed: " + path);
}

std::vector<Signature> cell_signatures(const std::vector<cplx>& field, const NuGrid& g) {
  if (field.size() != static_cast<std::size_t>(g.rows * g.cols)) {
    fail(Errc::invalid_argument, "cell_signatures: field does not match the grid");
  }
  auto fold = [](double a) {
    while (a > kPi) a -= 2 * kPi;
    while (a <= -kPi) a += 2 * kPi;
    return a;
  };
  std::vector<Signature> out;
  for (std::int64_t r = 0; r + 1 < g.rows; ++r) {
    for (std::int64_t c = 0; c + 1 < g.cols; ++c) {
      const cplx v[4] = {field[g.index(r, c)], field[g.index(r, c + 1)], field[g.index(r + 1, c + 1)],
                         field[g.index(r + 1, c)]};
      bool ok = true;
      for (const cplx& z : v) ok = ok && is_finite(z) && z != cplx(0.0, 0.0);
      if (!ok) continue;
      double total = 0.0;
      for (int k = 0; k < 4; ++k) total += fold(std::arg(v[(k + 1) % 4]) - std::arg(v[k]));
      const int w = static_cast<int>(std::lround(total / (2 * kPi)));
      if (w != 0) out.push_back({r, c, g.point(r, c) + cplx(0.5 * g.h, 0.5 * g.h), w});
    }
  }
  return out;
}

SignatureCensus compare_signatures(const NuGrid& g, const std::vector<ZeroRecord>& zeros) {
  SignatureCensus sc;
  auto interior = [&](std::int64_t r, std::int64_t c) {
    return r >= 1 && c >= 1 && r + 2 < g.rows && c + 2 < g.cols;
  };
  // +1 cell -> taken by a record
  std::map<std::pair<std::int64_t, std::int64_t>, bool> plus;
  for (const Signature& s : cell_signatures(g.nu, g)) {
    if (!interior(s.row, s.col)) continue;
    if (s.winding == 1) {
      plus[{s.row, s.col}] = false;
      ++sc.zero_cells;
    } else {
      ++sc.other_cells;
    }
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> pending;
  for (const auto& z : zeros) {
    const auto c = static_cast<std::int64_t>(std::floor((z.location.real() - g.rect.sigma_min) / g.h));
    const auto r = static_cast<std::int64_t>(std::floor((z.location.imag() - g.rect.t_min) / g.h));
    if (!interior(r, c)) continue;
    ++sc.records;
    if (auto it = plus.find({r, c}); it != plus.end() && !it->second) {
      it->second = true;
      ++sc.matched;
    } else {
      pending.emplace_back(r, c);
    }
  }
  // A zero within a few thousandths of a lattice line can show up in the neighbouring cell.
  for (const auto& [r, c] : pending) {
    bool done = false;
    for (std::int64_t dr = -1; dr <= 1 && !done; ++dr) {
      for (std::int64_t dc = -1; dc <= 1 && !done; ++dc) {
        if (auto it = plus.find({r + dr, c + dc}); it != plus.end() && !it->second) {
          it->second = true;
          ++sc.matched;
          done = true;
        }
      }
    }
  }
  sc.equivalent = sc.matched == sc.records && sc.records == sc.zero_cells && sc.other_cells == 0;
  return sc;
}

std::vector<std::pair<double, double>> resurgence_curve(double t_lo, double t_hi, int samples) {
  if (!(t_lo >= 0.5) || !(t_hi > t_lo) || samples < 2) {
    fail(Errc::invalid_argument, "resurgence_curve: need 0.5 <= t_lo < t_hi and samples >= 2");
  }
  if (2.0 * t_hi > kMaxImag) fail(Errc::range_exceeded, "resurgence_curve: t beyond the supported range");
  std::vector<std::pair<double, double>> out(samples);
  for (int k = 0; k < samples; ++k) {
    const double t = t_lo + (t_hi - t_lo) * k / (samples - 1);
    out[k] = {t, nu(cplx(1.0, 2.0 * t)).log2nd.real()};
  }
  return out;
}

void write_curve_csv(const std::vector<std::pair<double, double>>& curve, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Errc::io_error, "cannot open " + path);
  out.precision(17);
  out << "t,value\n";
  for (const auto& [t, v] : curve) out << t << "," << v << "\n";
  if (!out) fail(Errc::io_error, "write failed: " + path);
}

std::vector<double> local_extrema(const std::vector<std::pair<double, double>>& curve) {
  std::vector<double> out;
  for (std::size_t k = 1; k + 1 < curve.size(); ++k) {
    const double a = curve[k].second - curve[k - 1].second, b = curve[k + 1].second - curve[k].second;
    if (a * b < 0.0) out.push_back(curve[k].first);
  }
  return out;
}

}  // namespace zetanu
