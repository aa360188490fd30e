#include "zetanu/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include "zetanu/certificate.hpp"
#include "zetanu/coeffs.hpp"
#include "zetanu/plot.hpp"
#include "zetanu/stencil.hpp"
#include "zetanu/zeros.hpp"

namespace zetanu {

namespace {

using clock_type = std::chrono::steady_clock;

double since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

template <class... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Results shared between checks, computed on first use.
struct Shared {
  bool parallel = true;
  std::unique_ptr<CoeffTable> table;  // to 1e6
  std::optional<LocalizeResult> census;

  const CoeffTable& big_table() {
    if (!table) table = std::make_unique<CoeffTable>(build_table(1'000'000, parallel));
    return *table;
  }
  const LocalizeResult& census_zeros() {
    if (!census) {
      LocalizeOptions lo;
      lo.parallel = parallel;
      census = localize({kCensusSigmaMin, kCensusSigmaMax, kCensusTFloor, 200.0}, lo);
    }
    return *census;
  }
};

CriterionResult c1_duality(Shared& sh) {
  CriterionResult r{1, "coefficient duality", false, "", 0.0};
  const auto t0 = clock_type::now();
  const CoeffTable t = build_table(100'000, sh.parallel);  // throws formula_mismatch itself
  const std::vector<double> direct = log_divisor_coefficients(100'000, false);
  double worst = 0.0;
  for (std::int64_t n = 2; n <= t.limit; ++n) {
    worst = std::max(worst, std::abs(direct[n] - t.a[n]) / std::max(std::abs(direct[n]), 1e-12));
  }
  const double secs = since(t0);
  r.pass = worst <= 1e-9 && secs <= 30.0;
  r.detail = fmt("n <= 1e5: max rel diff %.2e, %.2f s", worst, secs);
  return r;
}

CriterionResult c2_lemma(Shared& sh) {
  CriterionResult r{2, "summatory bound, constant 10", false, "", 0.0};
  const CoeffTable& t = sh.big_table();
  double worst = 0.0, at = 0.0;
  for (int k = 0; k < 200; ++k) {
    const double x = 10.0 * std::pow(1e5, k / 199.0);
    const LemmaResidual lr = lemma_residual(x, t);
    const double ratio = std::abs(lr.residual) / lr.bound;
    if (ratio > worst) worst = ratio, at = x;
  }
  r.pass = worst <= 1.0;
  r.detail = fmt("200 x in [10, 1e6]: max |res|/bound %.4f at x = %.1f", worst, at);
  return r;
}

CriterionResult c3_exponent(Shared& sh) {
  CriterionResult r{3, "residual exponent 0.433", false, "", 0.0};
  const ResidualSup s = normalized_residual_sup(sh.big_table(), 1e2, 1e6, 0.433);
  const double mid = 0.5 * (1e2 + 1e6);
  r.pass = s.x <= mid;
  r.detail = fmt("sup %.4f at x = %.1f (midpoint %.0f)", s.value, s.x, mid);
  return r;
}

CriterionResult c4_delta4(Shared&) {
  CriterionResult r{4, "fourth difference of p", false, "", 0.0};
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 20.0);
  std::vector<double> ts(100);
  for (double& t : ts) t = u(rng);
  const double m = delta4_check(ts);
  r.pass = m <= 1e-10;
  r.detail = fmt("100 t in [0, 20]: max |D^4 p| %.2e", m);
  return r;
}

CriterionResult c5_functional(Shared&) {
  CriterionResult r{5, "functional equation", false, "", 0.0};
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> re(-5.0, 5.0), im(5.0, 100.0);
  std::bernoulli_distribution sign(0.5);
  double fe = 0.0, id = 0.0;
  for (int k = 0; k < 100; ++k) {
    const cplx s(re(rng), sign(rng) ? im(rng) : -im(rng));
    fe = std::max(fe, fe_residual(s));
    id = std::max(id, reflected_identity_residual(s));
  }
  r.pass = fe < 1e-7 && id < 1e-7;
  r.detail = fmt("100 points: max residual %.2e (nu), %.2e (log-derivative identity)", fe, id);
  return r;
}

CriterionResult c6_zero_free(Shared& sh) {
  CriterionResult r{6, "zero-free half-plane", false, "", 0.0};
  const int w = winding({4.25, 8.0, 0.5, 100.0});
  const CertificateReport cert = verify_theorem1(40.0, 4.25, sh.big_table(), false);
  bool eq11 = true;
  double eq11_min = 1e300;
  for (const auto& [s, m] : cert.consequence_margins) {
    eq11 = eq11 && m > 0.0;
    eq11_min = std::min(eq11_min, m);
  }
  const Theorem2Report t2 = verify_theorem2_constants(sh.big_table(), false);
  std::string bad;
  for (const auto& c : t2.checks) if (!c.ok) bad += " " + c.name;
  r.pass = w == 0 && cert.valid && cert.ineq1_monotone && eq11 && t2.valid;
  r.detail = fmt("winding %d; certificate %s (margins %.2e, %.1f); 0.5/40^(s/2) min margin %.2e; constants %s",
                 w, cert.valid ? "ok" : cert.failure.c_str(), cert.ineq1_margin, cert.ineq2_margin,
                 eq11_min, t2.valid ? "ok" : ("violated:" + bad).c_str());
  return r;
}

CriterionResult c7_census(Shared& sh) {
  CriterionResult r{7, "counting formula", false, "", 0.0};
  const auto t0 = clock_type::now();
  const LocalizeResult& lr = sh.census_zeros();
  const double secs = since(t0);
  bool ok = secs <= 600.0;
  std::string d;
  for (double T : {50.0, 100.0, 200.0}) {
    const CensusReport c = census_from(lr.zeros, T);
    ok = ok && std::abs(c.residual) <= 3.0 * std::log(T);
    d += fmt("T=%g: N=%ld formula %.2f res %+.2f (<= %.2f); ", T, static_cast<long>(c.n_computed), c.n_formula,
             c.residual, 3.0 * std::log(T));
  }
  r.pass = ok;
  r.detail = d + fmt("%.1f s", secs);
  return r;
}

CriterionResult c8_first_kind(Shared& sh) {
  CriterionResult r{8, "first-kind trivial zeros", false, "", 0.0};
  LocalizeOptions lo;
  lo.parallel = sh.parallel;
  // The first-kind zeros at this height sit near Re = -11.2; the strip left of -5 holds them all.
  const LocalizeResult lr = localize({-14.5, -5.0, 1e4, 1e4 + 100.0}, lo);
  std::vector<cplx> z;
  for (const auto& rec : lr.zeros) if (rec.kind == ZeroKind::trivial_first_kind) z.push_back(rec.location);
  double gap_lo = 1e300, gap_hi = 0.0, re_lo = 1e300, re_hi = -1e300;
  for (std::size_t i = 0; i < z.size(); ++i) {
    re_lo = std::min(re_lo, z[i].real());
    re_hi = std::max(re_hi, z[i].real());
    if (i > 0) {
      gap_lo = std::min(gap_lo, z[i].imag() - z[i - 1].imag());
      gap_hi = std::max(gap_hi, z[i].imag() - z[i - 1].imag());
    }
  }
  const bool count_ok = z.size() == 11;
  const bool gap_ok = z.size() > 1 && gap_lo >= 8.8 && gap_hi <= 9.4;
  const bool re_ok = !z.empty() && re_lo >= -12.7 && re_hi <= -11.7;
  r.pass = count_ok && gap_ok && re_ok;
  r.detail = fmt("count %zu [%s]; spacing %.3f..%.3f [%s]; Re %.3f..%.3f vs -12.2 +- 0.5 [%s]", z.size(),
                 count_ok ? "ok" : "FAIL", gap_lo, gap_hi, gap_ok ? "ok" : "FAIL", re_lo, re_hi,
                 re_ok ? "ok" : "FAIL");
  return r;
}

CriterionResult c9_second_kind(Shared& sh) {
  CriterionResult r{9, "second-kind trivial zeros", false, "", 0.0};
  LocalizeOptions lo;
  lo.parallel = sh.parallel;
  const LocalizeResult lr = localize({-9.5, -0.5, -5.0, 5.0}, lo);
  bool ok = true;
  std::string d;
  for (double c : {-2.0, -4.0, -6.0}) {
    // nearest upper-half zero to c whose conjugate was found as well
    double best = 1e300;
    cplx at{};
    for (const auto& a : lr.zeros) {
      if (a.location.imag() <= 0.0) continue;
      bool paired = false;
      for (const auto& b : lr.zeros) paired = paired || std::abs(b.location - std::conj(a.location)) < 1e-6;
      const double dist = std::abs(a.location - c);
      if (paired && dist < best) best = dist, at = a.location;
    }
    const bool hit = best <= 1.5;
    ok = ok && hit;
    d += fmt("%g: %.4f%+.4fi (dist %.3f) [%s]; ", c, at.real(), at.imag(), best, hit ? "ok" : "FAIL");
  }
  r.pass = ok;
  r.detail = d;
  return r;
}

CriterionResult c10_stencil(Shared& sh) {
  CriterionResult r{10, "stencil order and grid", false, "", 0.0};
  const OrderReport o = stencil_order_exp({0.02, 0.01, 0.005});
  GridOptions go;
  go.parallel = sh.parallel;
  go.probes = 0;
  const NuGrid g = grid_nu({-1.0, 3.0, 20.0, 24.0}, 0.04, go);
  const ProbeReport p = probe_grid(g, 20, 10);
  const std::int64_t lattice = g.rows * g.cols, ring = 2 * (g.rows + g.cols) - 4;
  r.pass = o.slope1 >= 7.0 && p.max_rel_err <= 1e-6 && g.zeta_evaluations <= lattice + ring;
  r.detail = fmt("slope f' %.2f (f'' %.2f); 20 probes max rel %.2e; zeta evals %ld <= %ld + %ld", o.slope1, o.slope2,
                 p.max_rel_err, static_cast<long>(g.zeta_evaluations), static_cast<long>(lattice),
                 static_cast<long>(ring));
  return r;
}

CriterionResult c11_density(Shared& sh) {
  CriterionResult r{11, "density growth", false, "", 0.0};
  const auto& z = sh.census_zeros().zeros;
  const std::int64_t c50 = density_from(z, 50.0, 0.1), c100 = density_from(z, 100.0, 0.1),
                     c200 = density_from(z, 200.0, 0.1);
  const bool a = c100 <= 2.5 * c50 + 5, b = c200 <= 2.5 * c100 + 5;
  r.pass = a && b;
  r.detail = fmt("counts %ld, %ld, %ld at T = 50, 100, 200; 100 vs 50 [%s], 200 vs 100 [%s]", static_cast<long>(c50),
                 static_cast<long>(c100), static_cast<long>(c200), a ? "ok" : "FAIL", b ? "ok" : "FAIL");
  return r;
}

CriterionResult c12_figures(Shared& sh, const std::string& dir) {
  CriterionResult r{12, "figures", false, "", 0.0};
  PlotOptions po;
  po.parallel = sh.parallel;
  LocalizeOptions lo;
  lo.parallel = sh.parallel;
  bool ok = true;
  std::string d;
  const std::pair<const char*, Rectangle> windows[] = {{"fig2", {-9.5, 10.5, 0.0, 100.0}},
                                                       {"fig3", {-30.0, 1.0, 0.0, 5.0}}};
  for (const auto& [name, rect] : windows) {
    PhasePlot pp = phase_plot(rect, 10.0, po);
    const LocalizeResult lr = localize({rect.sigma_min, rect.sigma_max, kCensusTFloor, rect.t_max}, lo);
    const SignatureCensus sc = compare_signatures(pp.grid, lr.zeros);
    ok = ok && sc.equivalent;
    d += fmt("%s: %ld zeros, %ld signatures, %ld matched [%s]; ", name, static_cast<long>(sc.records),
             static_cast<long>(sc.zero_cells), static_cast<long>(sc.matched), sc.equivalent ? "ok" : "FAIL");
    if (!dir.empty()) {
      draw_overlay(pp.image, lr.zeros);
      write_ppm(pp.image, (std::filesystem::path(dir) / (std::string(name) + ".ppm")).string());
    }
  }
  const auto curve = resurgence_curve(0.5, 50.0, 5000);
  double best = 1e300;
  for (double t : local_extrema(curve)) if (std::abs(t - 7.067) < std::abs(best - 7.067)) best = t;
  const bool ext = std::abs(best - 7.067) <= 0.2;
  ok = ok && ext;
  d += fmt("resurgence extremum at t = %.3f [%s]", best, ext ? "ok" : "FAIL");
  if (!dir.empty()) write_curve_csv(curve, (std::filesystem::path(dir) / "fig1.csv").string());
  r.pass = ok;
  r.detail = d;
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  Shared sh;
  sh.parallel = opts.parallel;
  if (!opts.output_dir.empty()) std::filesystem::create_directories(opts.output_dir);
  using Check = std::function<CriterionResult(Shared&)>;
  const std::vector<Check> checks = {
      c1_duality,  c2_lemma,       c3_exponent,    c4_delta4,    c5_functional, c6_zero_free,
      c7_census,   c8_first_kind,  c9_second_kind, c10_stencil,  c11_density,
      [&](Shared& s) { return c12_figures(s, opts.output_dir); }};
  static const char* titles[] = {"coefficient duality", "summatory bound, constant 10", "residual exponent 0.433",
                                 "fourth difference of p", "functional equation", "zero-free half-plane",
                                 "counting formula", "first-kind trivial zeros", "second-kind trivial zeros",
                                 "stencil order and grid", "density growth", "figures"};
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 12; ++id) {
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), id) == opts.only.end()) continue;
    const auto t0 = clock_type::now();
    CriterionResult r;
    try {
      r = checks[id - 1](sh);
    } catch (const Error& e) {
      r = {id, titles[id - 1], false, e.what(), 0.0};
    }
    r.seconds = since(t0);
    if (on_result) on_result(r);
    out.push_back(r);
  }
  return out;
}

std::string format_row(const CriterionResult& r) {
  return fmt("[%s] %2d  %-30s (%6.1f s)  %s", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds,
             r.detail.c_str());
}

}  // namespace zetanu
