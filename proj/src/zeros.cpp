#include "zetanu/zeros.hpp"

#include <algorithm>
#include <exception>
#include <random>
#include <sstream>

#include "zetanu/stencil.hpp"

namespace zetanu {

const char* to_string(ZeroKind k) noexcept {
  switch (k) {
    case ZeroKind::nontrivial: return "nontrivial";
    case ZeroKind::trivial_first_kind: return "trivial_first_kind";
    case ZeroKind::trivial_second_kind: return "trivial_second_kind";
    case ZeroKind::zeta_multiple_suspect: return "zeta_multiple_suspect";
  }
  return "?";
}

namespace {

std::string describe(const Rectangle& r) {
  std::ostringstream os;
  os.precision(12);
  os << "[" << r.sigma_min << ", " << r.sigma_max << "] x [" << r.t_min << ", " << r.t_max << "]";
  return os.str();
}

double wrap_angle(double a) {
  while (a > kPi) a -= 2.0 * kPi;
  while (a <= -kPi) a += 2.0 * kPi;
  return a;
}

struct Sampler {
  const ComplexFn& f;
  const WindingOptions& opts;
  std::int64_t evaluations = 0;

  // Argument of f(s); a pole, zero or failure on the edge counts as "too close".
  double arg_at(cplx s) {
    if (++evaluations > opts.max_evaluations) {
      fail(Errc::sampling_not_converged, "winding: evaluation budget exhausted");
    }
    cplx v;
    try {
      v = f(s);
    } catch (const Error& e) {
      fail(Errc::boundary_too_close, std::string("winding: evaluation failed on the edge: ") + e.what());
    }
    if (!is_finite(v) || v == cplx(0.0, 0.0)) {
      fail(Errc::boundary_too_close, "winding: zero or pole on the edge");
    }
    return std::arg(v);
  }

  // Total argument change from a to b, bisecting until each half and the whole turn < pi/2.
  double edge(cplx a, cplx b, double arg_a, double arg_b) {
    struct Seg {
      cplx a, b;
      double pa, pb;
    };
    double total = 0.0;
    std::vector<Seg> stack{{a, b, arg_a, arg_b}};
    while (!stack.empty()) {
      const Seg s = stack.back();
      stack.pop_back();
      const cplx m = 0.5 * (s.a + s.b);
      const double pm = arg_at(m);
      const double d_ab = wrap_angle(s.pb - s.pa);
      const double d_am = wrap_angle(pm - s.pa), d_mb = wrap_angle(s.pb - pm);
      const double lim = 0.5 * kPi;
      if (std::abs(d_ab) < lim && std::abs(d_am) < lim && std::abs(d_mb) < lim) {
        total += d_am + d_mb;
        continue;
      }
      if (std::abs(s.b - s.a) < opts.min_segment) {
        fail(Errc::boundary_too_close, "winding: argument turns too fast near the edge");
      }
      stack.push_back({m, s.b, pm, s.pb});
      stack.push_back({s.a, m, s.pa, pm});
    }
    return total;
  }
};

}  // namespace

WindingResult winding_fixed(const ComplexFn& f, const Rectangle& r, const WindingOptions& opts) {
  if (!r.valid()) fail(Errc::invalid_argument, "winding: empty rectangle " + describe(r));
  Sampler sm{f, opts};
  const cplx corner[4] = {{r.sigma_min, r.t_min}, {r.sigma_max, r.t_min}, {r.sigma_max, r.t_max},
                          {r.sigma_min, r.t_max}};
  double carg[4];
  for (int k = 0; k < 4; ++k) carg[k] = sm.arg_at(corner[k]);
  const double step0 = std::max(0.05, r.perimeter() / 400.0);
  double total = 0.0;
  for (int e = 0; e < 4; ++e) {
    const cplx a = corner[e], b = corner[(e + 1) % 4];
    const int m = std::max(1, static_cast<int>(std::ceil(std::abs(b - a) / step0)));
    double prev = carg[e];
    for (int k = 1; k <= m; ++k) {
      const cplx p0 = a + (b - a) * (static_cast<double>(k - 1) / m);
      const cplx p1 = k == m ? b : a + (b - a) * (static_cast<double>(k) / m);
      const double next = k == m ? carg[(e + 1) % 4] : sm.arg_at(p1);
      total += sm.edge(p0, p1, prev, next);
      prev = next;
    }
  }
  const double turns = total / (2.0 * kPi);
  const double w = std::round(turns);
  if (std::abs(turns - w) > 1e-6) {
    fail(Errc::sampling_not_converged, "winding: non-integer total " + std::to_string(turns));
  }
  return {static_cast<int>(w), r, 0, sm.evaluations};
}

WindingResult winding_of(const ComplexFn& f, const Rectangle& rect, const WindingOptions& opts) {
  Rectangle r = rect;
  std::int64_t evals = 0;
  for (int attempt = 0;; ++attempt) {
    try {
      WindingResult res = winding_fixed(f, r, opts);
      res.perturbations = attempt;
      res.evaluations += evals;
      return res;
    } catch (const Error& e) {
      if (e.code() != Errc::boundary_too_close || attempt >= opts.max_perturbations) throw;
    }
    // Push each side outward by a different small amount.
    const double d = 1e-4 * (attempt + 1) * std::max(1.0, 0.01 * rect.diameter());
    r = {rect.sigma_min - 0.618 * d, rect.sigma_max + 0.382 * d, rect.t_min - 0.854 * d,
         rect.t_max + 0.291 * d};
  }
}

namespace {

// nu (s-1)^4 has the zeros of nu and no pole, so sampling never has to resolve the order-4 pole.
cplx nu_regular(cplx s) {
  const cplx d = s - 1.0;
  const cplx d2 = d * d;
  return nu(s).nu * (d2 * d2);
}

int pole_inside(const Rectangle& r) {
  const cplx one(1.0, 0.0);
  return r.contains(one) && r.boundary_distance(one) > 0.0 ? 1 : 0;
}

}  // namespace

WindingResult nu_winding(const Rectangle& rect, const WindingOptions& opts) {
  Rectangle r = rect;
  if (r.valid() && r.contains(cplx(1.0, 0.0)) && r.boundary_distance(cplx(1.0, 0.0)) < 1e-3) {
    const double d = 1e-3;
    r = {r.sigma_min - 0.618 * d, r.sigma_max + 0.382 * d, r.t_min - 0.854 * d, r.t_max + 0.291 * d};
  }
  WindingResult res = winding_of(nu_regular, r, opts);
  res.winding -= 4 * pole_inside(res.rect);
  return res;
}

int winding(const Rectangle& rect) { return nu_winding(rect).winding; }

std::optional<ZeroRecord> newton_refine(cplx start, const LocalizeOptions& opts) {
  const StencilScheme st = build_stencil(opts.newton_h);
  auto f = [](cplx s) { return nu(s).nu; };
  cplx z = start;
  try {
    for (int it = 0; it < opts.newton_max_iter; ++it) {
      const cplx v = f(z);
      const cplx d = stencil_derivs(st, f, z).first;
      if (!is_finite(v) || !is_finite(d) || d == cplx(0.0, 0.0)) return std::nullopt;
      const cplx step = v / d;
      z -= step;
      if (!is_finite(z) || std::abs(z - start) > 1e3) return std::nullopt;
      if (std::abs(step) <= 1e-14 * std::max(1.0, std::abs(z))) break;
    }
    const EvalBundle b = zeta_derivs(z, 2);
    ZeroRecord rec;
    rec.location = z;
    rec.newton_residual = std::abs(f(z));
    rec.local_scale = std::abs(b.zeta * b.zeta2) + std::norm(b.zeta1);
    if (!(rec.newton_residual <= opts.newton_tol * rec.local_scale)) return std::nullopt;
    return rec;
  } catch (const Error&) {
    return std::nullopt;
  }
}

namespace {

struct Box {
  Rectangle r;
  int w = 0;
  int depth = 0;
};

struct Outcome {
  std::vector<Box> children;
  std::optional<ZeroRecord> record;
  std::int64_t evaluations = 0;
  std::exception_ptr error;
};

std::uint64_t box_seed(const Box& b, std::uint64_t seed) {
  const std::hash<double> hd;
  std::uint64_t h = seed ^ (static_cast<std::uint64_t>(b.depth) * 0x9E3779B97F4A7C15ull);
  for (double v : {b.r.sigma_min, b.r.sigma_max, b.r.t_min, b.r.t_max}) {
    h ^= hd(v) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  }
  return h;
}

Outcome split(const Box& box, const ComplexFn& f, const LocalizeOptions& opts) {
  Outcome out;
  std::mt19937_64 rng(box_seed(box, opts.seed));
  std::uniform_real_distribution<double> jitter(-0.1, 0.1);
  const Rectangle& r = box.r;
  for (int attempt = 0; attempt < 6; ++attempt) {
    const double fx = 0.5 + jitter(rng), fy = 0.5 + jitter(rng);
    const double xs = r.sigma_min + fx * r.width(), ys = r.t_min + fy * r.height();
    std::vector<Rectangle> parts;
    if (r.width() > 2.0 * r.height()) {
      parts = {{r.sigma_min, xs, r.t_min, r.t_max}, {xs, r.sigma_max, r.t_min, r.t_max}};
    } else if (r.height() > 2.0 * r.width()) {
      parts = {{r.sigma_min, r.sigma_max, r.t_min, ys}, {r.sigma_min, r.sigma_max, ys, r.t_max}};
    } else {
      parts = {{r.sigma_min, xs, r.t_min, ys}, {xs, r.sigma_max, r.t_min, ys},
               {r.sigma_min, xs, ys, r.t_max}, {xs, r.sigma_max, ys, r.t_max}};
    }
    std::vector<Box> kids;
    int sum = 0;
    bool ok = true;
    for (const Rectangle& p : parts) {
      try {
        const WindingResult wr = winding_fixed(f, p, opts.winding);
        out.evaluations += wr.evaluations;
        kids.push_back({p, wr.winding, box.depth + 1});
        sum += wr.winding;
      } catch (const Error& e) {
        if (e.code() != Errc::boundary_too_close) throw;
        ok = false;
        break;
      }
    }
    if (ok && sum == box.w) {
      out.children = std::move(kids);
      return out;
    }
  }
  fail(Errc::sampling_not_converged, "localize: cannot split " + describe(r) + " consistently");
}

Outcome process(const Box& box, const ComplexFn& f, const LocalizeOptions& opts) {
  if (box.w == 0) return {};
  if (box.depth >= opts.max_depth) {
    fail(Errc::max_depth_exceeded, "localize: unresolved box " + describe(box.r) +
                                       " with winding " + std::to_string(box.w));
  }
  const double diam = box.r.diameter();
  if (box.w == 1) {
    if (auto rec = newton_refine(box.r.center(), opts); rec && box.r.contains(rec->location, 1e-12)) {
      rec->winding = 1;
      Outcome out;
      out.record = rec;
      return out;
    }
    return split(box, f, opts);
  }
  if (box.w >= 2 && diam < opts.cluster_diameter) {
    ZeroRecord rec;
    if (auto r = newton_refine(box.r.center(), opts)) rec = *r;
    else rec.location = box.r.center();
    rec.kind = ZeroKind::zeta_multiple_suspect;
    rec.winding = box.w;
    Outcome out;
    out.record = rec;
    return out;
  }
  return split(box, f, opts);
}

}  // namespace

LocalizeResult localize(const Rectangle& rect, const LocalizeOptions& opts) {
  if (!rect.valid()) fail(Errc::invalid_argument, "localize: empty rectangle");
  if (std::max(std::abs(rect.t_min), std::abs(rect.t_max)) > kMaxImag) {
    fail(Errc::range_exceeded, "localize: |t| beyond the supported range");
  }
  const ComplexFn f = nu_regular;
  LocalizeResult res;
  const WindingResult outer = nu_winding(rect, opts.winding);
  res.rect = outer.rect;
  res.outer_winding = outer.winding;
  res.evaluations = outer.evaluations;

  // Boxes carry windings of the pole-free function, i.e. plain zero counts.
  std::vector<Box> work{{outer.rect, outer.winding + 4 * pole_inside(outer.rect), 0}};
  while (!work.empty()) {
    std::vector<Outcome> out(work.size());
    const auto n = static_cast<std::int64_t>(work.size());
#pragma omp parallel for schedule(dynamic, 1) if (opts.parallel)
    for (std::int64_t i = 0; i < n; ++i) {
      try {
        out[i] = process(work[i], f, opts);
      } catch (...) {
        out[i].error = std::current_exception();
      }
    }
    res.boxes += n;
    std::vector<Box> next;
    for (auto& o : out) {
      if (o.error) std::rethrow_exception(o.error);
      res.evaluations += o.evaluations;
      if (o.record) res.zeros.push_back(*o.record);
      next.insert(next.end(), o.children.begin(), o.children.end());
    }
    work = std::move(next);
  }

  for (auto& z : res.zeros) {
    if (z.kind == ZeroKind::zeta_multiple_suspect) continue;
    std::optional<int> pred;
    z.kind = classify(z.location, &pred);
    z.predicted_from = pred;
  }
  std::sort(res.zeros.begin(), res.zeros.end(), [](const ZeroRecord& a, const ZeroRecord& b) {
    if (a.location.imag() != b.location.imag()) return a.location.imag() < b.location.imag();
    return a.location.real() < b.location.real();
  });
  return res;
}

double first_kind_seed(int n) { return (2.0 * kPi * n + 1.5 * kPi) / kLog2; }

FirstKindPrediction predict_first_kind_n(int n) {
  const double t0 = first_kind_seed(n);
  const double l2 = kLog2 * kLog2;
  // Model zero u of log(2)^2 u + 2^u = 0, i.e. 1/u + log(2)^2 2^{-u} = 0.
  cplx u(std::log(t0) / kLog2, t0);
  for (int it = 0; it < 60; ++it) {
    const cplx p = std::exp(u * kLog2);
    const cplx step = (l2 * u + p) / (l2 + kLog2 * p);
    u -= step;
    if (std::abs(step) < 1e-14 * std::abs(u)) break;
  }
  return {n, u.imag(), 1.0 - u.real()};
}

std::vector<FirstKindPrediction> predict_first_kind(double t_lo, double t_hi) {
  if (!(t_lo >= 20.0) || !(t_hi >= t_lo)) fail(Errc::invalid_argument, "predict_first_kind: need 20 <= t_lo <= t_hi");
  if (t_hi > kMaxImag) fail(Errc::range_exceeded, "predict_first_kind: t beyond the supported range");
  const int n_lo = std::max(0, static_cast<int>(std::floor((t_lo * kLog2 - 1.5 * kPi) / (2 * kPi))) - 1);
  const int n_hi = static_cast<int>(std::ceil((t_hi * kLog2 - 1.5 * kPi) / (2 * kPi))) + 1;
  std::vector<FirstKindPrediction> out;
  for (int n = n_lo; n <= n_hi; ++n) {
    const FirstKindPrediction p = predict_first_kind_n(n);
    if (p.t_pred >= t_lo && p.t_pred <= t_hi) out.push_back(p);
  }
  return out;
}

ZeroKind classify(cplx s, std::optional<int>* predicted_from, const ClassifyRadii& radii) {
  if (predicted_from) predicted_from->reset();
  const double t = std::abs(s.imag());
  const cplx su(s.real(), t);
  if (t >= 15.0) {
    const int n0 = static_cast<int>(std::lround((t * kLog2 - 1.5 * kPi) / (2 * kPi)));
    for (int n = std::max(0, n0 - 1); n <= n0 + 1; ++n) {
      const FirstKindPrediction p = predict_first_kind_n(n);
      if (std::abs(su - cplx(p.sigma_pred, p.t_pred)) <= radii.first_kind) {
        if (predicted_from) *predicted_from = n;
        return ZeroKind::trivial_first_kind;
      }
    }
  }
  const double k = std::round(-0.5 * s.real());
  if (k >= 1.0 && std::abs(s + 2.0 * k) <= radii.second_kind) return ZeroKind::trivial_second_kind;
  return ZeroKind::nontrivial;
}

double count_formula(double T) {
  if (!(T > 0.0)) fail(Errc::invalid_argument, "count_formula: T must be positive");
  const double u = T / (2.0 * kPi);
  return 2.0 * (u * std::log(u) - u) - kLog2 / kPi * T;
}

CensusReport census_from(const std::vector<ZeroRecord>& zeros, double T) {
  CensusReport rep;
  rep.T = T;
  for (const auto& z : zeros) {
    const cplx s = z.location;
    if (s.imag() > 0.0 && s.imag() < T && s.real() > kCensusSigmaMin && s.real() < kCensusSigmaMax) {
      rep.n_computed += z.kind == ZeroKind::zeta_multiple_suspect ? z.winding : 1;
    }
  }
  rep.n_formula = count_formula(T);
  rep.residual = static_cast<double>(rep.n_computed) - rep.n_formula;
  return rep;
}

CensusReport census_compare(double T, const LocalizeOptions& opts) {
  if (!(T >= 20.0 && T <= 500.0)) fail(Errc::invalid_argument, "census_compare: T must lie in [20, 500]");
  const LocalizeResult lr = localize({kCensusSigmaMin, kCensusSigmaMax, kCensusTFloor, T}, opts);
  return census_from(lr.zeros, T);
}

std::int64_t density_from(const std::vector<ZeroRecord>& zeros, double T, double delta) {
  std::int64_t count = 0;
  for (const auto& z : zeros) {
    if (z.location.real() > 5.0 / 6.0 + delta && z.location.imag() > 0.0 && z.location.imag() <= T) {
      count += 2;  // with the conjugate
    }
  }
  return count;
}

std::int64_t density_count(double T, double delta, const LocalizeOptions& opts) {
  if (!(delta > 0.0)) fail(Errc::invalid_argument, "density_count: delta must be positive");
  if (!(T > kCensusTFloor)) fail(Errc::invalid_argument, "density_count: T too small");
  const double left = 5.0 / 6.0 + delta;
  const LocalizeResult lr = localize({left, std::max(kCensusSigmaMax, left + 0.5), kCensusTFloor, T}, opts);
  return density_from(lr.zeros, T, delta);
}

}  // namespace zetanu
