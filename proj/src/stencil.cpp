#include "zetanu/stencil.hpp"

#include <Eigen/Dense>
#include <bit>
#include <cstring>
#include <fstream>
#include <limits>
#include <random>

namespace zetanu {

static_assert(std::endian::native == std::endian::little, "grid files are written natively");

namespace {

constexpr std::array<cplx, 9> kUnitOffsets = {
    cplx(0, 0),  cplx(1, 0),  cplx(-1, 0), cplx(0, 1),   cplx(0, -1),
    cplx(1, 1),  cplx(1, -1), cplx(-1, 1), cplx(-1, -1),
};

const cplx kNaN(std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN());

Eigen::Matrix<cplx, 9, 9> unit_vandermonde() {
  Eigen::Matrix<cplx, 9, 9> V;
  for (int k = 0; k < 9; ++k) {
    cplx p = 1.0;
    for (int j = 0; j < 9; ++j) {
      V(j, k) = p;
      p *= kUnitOffsets[k];
    }
  }
  return V;
}

}  // namespace

cplx StencilScheme::d1(const std::array<cplx, 9>& f) const {
  cplx acc = 0.0;
  for (int k = 0; k < 9; ++k) acc += c1[k] * f[k];
  return acc;
}

cplx StencilScheme::d2(const std::array<cplx, 9>& f) const {
  cplx acc = 0.0;
  for (int k = 0; k < 9; ++k) acc += c2[k] * f[k];
  return acc;
}

StencilScheme build_stencil(double h) {
  if (!(h >= 1e-6 && h <= 0.1)) fail(Errc::invalid_argument, "stencil step must lie in [1e-6, 0.1]");
  const Eigen::Matrix<cplx, 9, 9> V = unit_vandermonde();
  Eigen::PartialPivLU<Eigen::Matrix<cplx, 9, 9>> lu(V);
  // Distinct nodes make V invertible; guard anyway.
  if (!(std::abs(lu.determinant()) > 1e-12)) fail(Errc::singular_system, "stencil moment matrix");
  Eigen::Matrix<cplx, 9, 1> e1 = Eigen::Matrix<cplx, 9, 1>::Zero(), e2 = e1;
  e1(1) = 1.0;
  e2(2) = 2.0;
  const Eigen::Matrix<cplx, 9, 1> w1 = lu.solve(e1), w2 = lu.solve(e2);

  StencilScheme s;
  s.h = h;
  for (int k = 0; k < 9; ++k) {
    s.offsets[k] = h * kUnitOffsets[k];
    s.c1[k] = w1(k) / h;
    s.c2[k] = w2(k) / (h * h);
  }
  s.order = 8;
  return s;
}

double moment_defect(const StencilScheme& s) {
  double worst = 0.0;
  for (int j = 0; j <= 8; ++j) {
    cplx m1 = 0.0, m2 = 0.0;
    for (int k = 0; k < 9; ++k) {
      const cplx d = std::pow(kUnitOffsets[k], j);
      m1 += s.c1[k] * s.h * d;
      m2 += s.c2[k] * s.h * s.h * d;
    }
    const double t1 = j == 1 ? 1.0 : 0.0, t2 = j == 2 ? 2.0 : 0.0;
    worst = std::max(worst, std::abs(m1 - t1) / std::max(1.0, t1));
    worst = std::max(worst, std::abs(m2 - t2) / std::max(1.0, t2));
  }
  return worst;
}

std::pair<cplx, cplx> stencil_derivs(const StencilScheme& s, const std::function<cplx(cplx)>& f,
                                     cplx z) {
  std::array<cplx, 9> v;
  for (int k = 0; k < 9; ++k) v[k] = f(z + s.offsets[k]);
  return {s.d1(v), s.d2(v)};
}

NuGrid grid_nu(const Rectangle& rect, double h, const GridOptions& opts) {
  if (!rect.valid()) fail(Errc::invalid_argument, "grid_nu: empty rectangle");
  if (!(h > 0.0) || h > 0.1) fail(Errc::invalid_argument, "grid_nu: h must lie in (0, 0.1]");
  const double wc = rect.width() / h, hr = rect.height() / h;
  if (std::abs(wc - std::round(wc)) > 1e-9 * std::max(1.0, wc) ||
      std::abs(hr - std::round(hr)) > 1e-9 * std::max(1.0, hr)) {
    fail(Errc::invalid_argument, "grid_nu: rectangle sides must be multiples of h");
  }
  NuGrid g;
  g.rect = rect;
  g.h = h;
  g.cols = static_cast<std::int64_t>(std::llround(wc)) + 1;
  g.rows = static_cast<std::int64_t>(std::llround(hr)) + 1;
  if (g.rows * g.cols > opts.max_points) fail(Errc::budget_exceeded, "grid_nu: too many points");
  if (std::max(std::abs(rect.t_min), std::abs(rect.t_max)) > kMaxImag) {
    fail(Errc::range_exceeded, "grid_nu: |t| beyond the supported range");
  }
  const auto n = static_cast<std::int64_t>(g.rows * g.cols);
  const StencilScheme st = build_stencil(h);

  // Pass 1: zeta once per lattice point.
  std::vector<cplx> z(n);
#pragma omp parallel for schedule(dynamic, 64) if (opts.parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      z[i] = zeta_derivs(g.point(i / g.cols, i % g.cols), 0).zeta;
    } catch (const Error&) {
      z[i] = kNaN;
    }
  }

  // Pass 2: stencil in the interior, direct evaluation on the ring and around invalid points.
  g.nu.assign(n, kNaN);
  g.log2nd.assign(n, kNaN);
  static constexpr int dr[9] = {0, 0, 0, 1, -1, 1, -1, 1, -1};
  static constexpr int dc[9] = {0, 1, -1, 0, 0, 1, 1, -1, -1};
  std::int64_t direct = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : direct) if (opts.parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    const std::int64_t r = i / g.cols, c = i % g.cols;
    if (!is_finite(z[i])) continue;
    bool use_stencil = r > 0 && c > 0 && r + 1 < g.rows && c + 1 < g.cols;
    std::array<cplx, 9> v;
    for (int k = 0; use_stencil && k < 9; ++k) {
      v[k] = z[g.index(r + dr[k], c + dc[k])];
      if (!is_finite(v[k])) use_stencil = false;
    }
    cplx f = z[i], f1, f2;
    if (use_stencil) {
      f1 = st.d1(v);
      f2 = st.d2(v);
    } else {
      try {
        const EvalBundle b = zeta_derivs(g.point(r, c), 2);
        f = b.zeta;
        f1 = b.zeta1;
        f2 = b.zeta2;
        ++direct;
      } catch (const Error&) {
        continue;
      }
    }
    const cplx v_nu = f * f2 - f1 * f1;
    g.nu[i] = v_nu;
    g.log2nd[i] = v_nu / (f * f);
  }
  g.direct_evaluations = direct;
  g.zeta_evaluations = n + direct;

  if (opts.probes > 0 && g.rows > 2 && g.cols > 2) {
    const ProbeReport p = probe_grid(g, opts.probes, opts.seed);
    if (p.max_rel_err > opts.probe_tolerance) {
      fail(Errc::step_too_coarse,
           "grid_nu: stencil vs direct disagreement " + std::to_string(p.max_rel_err));
    }
  }
  return g;
}

ProbeReport probe_grid(const NuGrid& g, int probes, std::uint64_t seed) {
  ProbeReport rep;
  if (g.rows < 3 || g.cols < 3) return rep;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pr(1, g.rows - 2), pc(1, g.cols - 2);
  for (int k = 0, tries = 0; k < probes && tries < 50 * probes; ++tries) {
    const std::int64_t r = pr(rng), c = pc(rng);
    const cplx got = g.nu[g.index(r, c)];
    if (!is_finite(got)) continue;
    EvalBundle b;
    try {
      b = zeta_derivs(g.point(r, c), 2);
    } catch (const Error&) {
      continue;
    }
    const cplx want = b.zeta * b.zeta2 - b.zeta1 * b.zeta1;
    // Scale by the size of the two products so that points near zeros of nu stay meaningful.
    const double scale = std::abs(b.zeta * b.zeta2) + std::norm(b.zeta1);
    rep.max_rel_err = std::max(rep.max_rel_err, std::abs(got - want) / scale);
    ++k;
    ++rep.probes;
  }
  return rep;
}

void write_grid(const NuGrid& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot open " + path);
  const std::uint64_t dims[2] = {static_cast<std::uint64_t>(g.rows), static_cast<std::uint64_t>(g.cols)};
  const double meta[5] = {g.rect.sigma_min, g.rect.sigma_max, g.rect.t_min, g.rect.t_max, g.h};
  out.write(reinterpret_cast<const char*>(dims), sizeof dims);
  out.write(reinterpret_cast<const char*>(meta), sizeof meta);
  for (std::size_t i = 0; i < g.nu.size(); ++i) {
    const double e[4] = {g.nu[i].real(), g.nu[i].imag(), g.log2nd[i].real(), g.log2nd[i].imag()};
    out.write(reinterpret_cast<const char*>(e), sizeof e);
  }
  if (!out) fail(Errc::io_error, "write failed: " + path);
}

NuGrid read_grid(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_error, "cannot open " + path);
  std::uint64_t dims[2];
  double meta[5];
  in.read(reinterpret_cast<char*>(dims), sizeof dims);
  in.read(reinterpret_cast<char*>(meta), sizeof meta);
  if (!in || dims[0] == 0 || dims[1] == 0 || dims[0] * dims[1] > (1ull << 32)) {
    fail(Errc::io_error, "bad grid header: " + path);
  }
  NuGrid g;
  g.rows = static_cast<std::int64_t>(dims[0]);
  g.cols = static_cast<std::int64_t>(dims[1]);
  g.rect = {meta[0], meta[1], meta[2], meta[3]};
  g.h = meta[4];
  const std::size_t n = dims[0] * dims[1];
  g.nu.resize(n);
  g.log2nd.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double e[4];
    in.read(reinterpret_cast<char*>(e), sizeof e);
    g.nu[i] = {e[0], e[1]};
    g.log2nd[i] = {e[2], e[3]};
  }
  if (!in) fail(Errc::io_error, "truncated grid file: " + path);
  return g;
}

}  // namespace zetanu
