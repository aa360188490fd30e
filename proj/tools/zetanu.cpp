// Command-line front end: one subcommand per operation, JSON on stdout.
#include <omp.h>

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>

#include "zetanu/acceptance.hpp"
#include "zetanu/certificate.hpp"
#include "zetanu/coeffs.hpp"
#include "zetanu/config.hpp"
#include "zetanu/plot.hpp"
#include "zetanu/stencil.hpp"
#include "zetanu/zeros.hpp"

using json = nlohmann::json;
using namespace zetanu;

namespace {

json cj(cplx z) { return json::array({z.real(), z.imag()}); }

json record_json(const ZeroRecord& z) {
  json j{{"re", z.location.real()},
         {"im", z.location.imag()},
         {"kind", to_string(z.kind)},
         {"winding", z.winding},
         {"residual", z.newton_residual},
         {"scale", z.local_scale}};
  j["predicted_from"] = z.predicted_from ? json(*z.predicted_from) : json(nullptr);
  return j;
}

std::vector<ZeroRecord> read_overlay(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(Errc::invalid_argument, path + ": " + e.what());
  }
  const json& arr = j.is_array() ? j : j.at("zeros");
  std::vector<ZeroRecord> out;
  for (const auto& z : arr) {
    ZeroRecord r;
    r.location = cplx(z.at("re").get<double>(), z.at("im").get<double>());
    out.push_back(r);
  }
  return out;
}

std::string in_dir(const Config& cfg, const std::string& name) {
  std::filesystem::create_directories(cfg.output_dir);
  return (std::filesystem::path(cfg.output_dir) / name).string();
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerics for nu(s) = zeta(s) zeta''(s) - zeta'(s)^2"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string config_path;
  int jobs = -1;
  bool serial = false;
  app.add_option("--config", config_path, "key=value settings file")->check(CLI::ExistingFile);
  app.add_option("--jobs", jobs, "OpenMP threads (overrides config)")->check(CLI::Range(0, 1024));
  app.add_flag("--serial", serial, "use the serial reference kernels");

  // eval
  auto* eval = app.add_subcommand("eval", "zeta, its derivatives and nu at a point");
  std::string s_text;
  int em_n = -1;
  eval->add_option("--s", s_text, "re,im")->required();
  eval->add_option("--em-n", em_n, "Euler-Maclaurin truncation (0: automatic)")->check(CLI::Range(0, 1000000));

  // coeff
  auto* coeff = app.add_subcommand("coeff", "Dirichlet coefficients at n");
  std::int64_t coeff_n = 0;
  coeff->add_option("--n", coeff_n)->required()->check(CLI::Range(std::int64_t{1}, kMaxTableLimit));

  // sum-check
  auto* sum = app.add_subcommand("sum-check", "summatory bound at log-spaced x and the 0.433 sup");
  double sum_xmax = 1e6;
  int sum_points = 200;
  bool sum_rows = false;
  sum->add_option("--xmax", sum_xmax)->check(CLI::Range(100.0, 1e8));
  sum->add_option("--points", sum_points)->check(CLI::Range(2, 100000));
  sum->add_flag("--rows", sum_rows, "include every sample");

  // fe-check
  auto* fe = app.add_subcommand("fe-check", "functional-equation residuals at random points");
  int fe_points = 100;
  std::uint64_t fe_seed = 5;
  fe->add_option("--points", fe_points)->check(CLI::Range(1, 1000000));
  fe->add_option("--seed", fe_seed);

  // zeros
  auto* zeros = app.add_subcommand("zeros", "localize the zeros of nu in a rectangle");
  std::string zeros_rect, zeros_format = "json", zeros_out;
  zeros->add_option("--rect", zeros_rect, "sigma_min,sigma_max,t_min,t_max (default: census_rect)");
  zeros->add_option("--format", zeros_format)->check(CLI::IsMember({"json", "csv"}));
  zeros->add_option("--out", zeros_out, "write to a file instead of stdout");

  // count-check
  auto* count = app.add_subcommand("count-check", "computed zero count against the main term");
  double count_T = 100.0;
  count->add_option("--T", count_T)->required()->check(CLI::Range(20.0, 500.0));

  // predict-trivial
  auto* pred = app.add_subcommand("predict-trivial", "first-kind predictions in a t range");
  std::string pred_range;
  pred->add_option("--trange", pred_range, "t_lo,t_hi")->required();

  // certify
  auto* cert = app.add_subcommand("certify", "zero-free half-plane certificate");
  double cert_x = 40.0, cert_sigma = 4.25;
  bool cert_constants = false;
  cert->add_option("--x", cert_x);
  cert->add_option("--sigma0", cert_sigma);
  cert->add_flag("--constants", cert_constants, "also check the constants of the counting argument");

  // stencil
  auto* sten = app.add_subcommand("stencil", "nine-point weights and self-test");
  sten->set_help_flag("--help", "Print this help message and exit");
  double sten_h = -1.0;
  bool sten_selftest = false;
  sten->add_option("--h", sten_h, "step (default: grid_h)");
  sten->add_flag("--selftest", sten_selftest, "convergence order and grid probes");

  // plot
  auto* plot = app.add_subcommand("plot", "phase plot of (zeta'/zeta)' as binary PPM");
  std::string plot_rect, plot_out, plot_overlay, plot_grid_out;
  double plot_ppu = 10.0;
  bool plot_no_guides = false, plot_zeros = false;
  plot->add_option("--rect", plot_rect)->required();
  plot->add_option("--ppu", plot_ppu, "pixels per unit (>= 10)");
  plot->add_option("--out", plot_out, "default: <output_dir>/phase.ppm");
  plot->add_option("--overlay", plot_overlay, "zeros JSON to mark");
  plot->add_flag("--mark-zeros", plot_zeros, "localize and mark the zeros in the window");
  plot->add_flag("--no-guides", plot_no_guides);
  plot->add_option("--grid-out", plot_grid_out, "also save the nu lattice");

  // resurgence
  auto* res = app.add_subcommand("resurgence", "Re (zeta'/zeta)'(1 + 2it) as CSV");
  std::string res_range = "0.5,50", res_out;
  int res_samples = 5000;
  res->add_option("--trange", res_range);
  res->add_option("--samples", res_samples)->check(CLI::Range(2, 10000000));
  res->add_option("--out", res_out, "default: <output_dir>/fig1.csv");

  // verify-all
  auto* all = app.add_subcommand("verify-all", "run the acceptance table");
  std::vector<int> all_only;
  bool all_figures = false;
  all->add_option("--only", all_only, "criterion ids")->delimiter(',')->check(CLI::Range(1, 12));
  all->add_flag("--figures", all_figures, "write fig1.csv, fig2.ppm, fig3.ppm to output_dir");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const bool par = !serial;
  try {
    Config cfg;
    try {
      if (!config_path.empty()) cfg = load_config(config_path);
      if (jobs >= 0) cfg.jobs = jobs;
      cfg.validate();
    } catch (const Error& e) {
      std::cerr << "usage: " << e.what() << "\n";
      return 2;
    }
    if (cfg.jobs > 0) omp_set_num_threads(cfg.jobs);

    if (*eval) {
      const auto [re, im] = parse_pair(s_text);
      EvalOptions eo;
      eo.em_truncation = em_n >= 0 ? em_n : cfg.em_truncation;
      const cplx s(re, im);
      const EvalBundle b = zeta_derivs(s, 2, eo);
      const NuValue v = nu(s, eo);
      print({{"s", cj(s)}, {"zeta", cj(b.zeta)}, {"zeta1", cj(b.zeta1)}, {"zeta2", cj(b.zeta2)},
             {"method", to_string(b.method)}, {"est_abs_err", b.est_abs_err}, {"nu", cj(v.nu)},
             {"log2nd", cj(v.log2nd)}, {"nu_method", to_string(v.method)}, {"region", to_string(v.region)}});
    } else if (*coeff) {
      const CoeffTable t = build_table(std::max<std::int64_t>(coeff_n, 2), par);
      print({{"n", coeff_n}, {"a", t.a[coeff_n]}, {"b", t.b[coeff_n]}, {"lambda", t.lambda[coeff_n]},
             {"tau", t.tau[coeff_n]}, {"A_le_n", static_cast<double>(t.prefix_a[coeff_n])}});
    } else if (*sum) {
      const CoeffTable t = build_table(static_cast<std::int64_t>(std::ceil(sum_xmax)) + 1, par);
      json rows = json::array();
      double worst = 0.0, at = 0.0;
      for (int k = 0; k < sum_points; ++k) {
        const double x = 10.0 * std::pow(sum_xmax / 10.0, static_cast<double>(k) / (sum_points - 1));
        const LemmaResidual lr = lemma_residual(x, t);
        const double ratio = std::abs(lr.residual) / lr.bound;
        if (ratio > worst) worst = ratio, at = x;
        if (sum_rows) rows.push_back({{"x", x}, {"residual", lr.residual}, {"bound", lr.bound}});
      }
      const ResidualSup sup = normalized_residual_sup(t, 1e2, sum_xmax, 0.433);
      json j{{"points", sum_points}, {"max_ratio", worst}, {"argmax", at}, {"within_bound", worst <= 1.0},
             {"sup_0433", {{"x", sup.x}, {"value", sup.value}, {"lower_half", sup.x <= 0.5 * (1e2 + sum_xmax)}}}};
      if (sum_rows) j["rows"] = rows;
      print(j);
    } else if (*fe) {
      std::mt19937_64 rng(fe_seed);
      std::uniform_real_distribution<double> re(-5.0, 5.0), im(5.0, 100.0);
      std::bernoulli_distribution sign(0.5);
      double a = 0.0, b = 0.0;
      for (int k = 0; k < fe_points; ++k) {
        const cplx s(re(rng), sign(rng) ? im(rng) : -im(rng));
        a = std::max(a, fe_residual(s));
        b = std::max(b, reflected_identity_residual(s));
      }
      print({{"points", fe_points}, {"seed", fe_seed}, {"max_fe_residual", a}, {"max_identity_residual", b},
             {"within_1e-7", a < 1e-7 && b < 1e-7}});
    } else if (*zeros) {
      LocalizeOptions lo;
      lo.parallel = par;
      const Rectangle rect = zeros_rect.empty() ? cfg.census_rect : parse_rect(zeros_rect);
      const LocalizeResult lr = localize(rect, lo);
      std::ostringstream os;
      if (zeros_format == "csv") {
        os.precision(17);
        os << "re,im,kind,residual,scale\n";
        for (const auto& z : lr.zeros) {
          os << z.location.real() << "," << z.location.imag() << "," << to_string(z.kind) << "," << z.newton_residual
             << "," << z.local_scale << "\n";
        }
      } else {
        json arr = json::array();
        for (const auto& z : lr.zeros) arr.push_back(record_json(z));
        const Rectangle& r = lr.rect;
        os << json{{"rect", {r.sigma_min, r.sigma_max, r.t_min, r.t_max}},
                   {"outer_winding", lr.outer_winding},
                   {"boxes", lr.boxes},
                   {"evaluations", lr.evaluations},
                   {"zeros", arr}}
                  .dump(2)
           << "\n";
      }
      if (zeros_out.empty()) {
        std::cout << os.str();
      } else {
        std::ofstream f(zeros_out);
        if (!(f << os.str())) fail(Errc::io_error, "cannot write " + zeros_out);
      }
    } else if (*count) {
      LocalizeOptions lo;
      lo.parallel = par;
      const CensusReport c = census_compare(count_T, lo);
      print({{"T", c.T}, {"N_computed", c.n_computed}, {"N_formula", c.n_formula}, {"residual", c.residual},
             {"bound", 3.0 * std::log(c.T)}, {"within_bound", std::abs(c.residual) <= 3.0 * std::log(c.T)}});
    } else if (*pred) {
      const auto [lo, hi] = parse_pair(pred_range);
      json arr = json::array();
      for (const auto& p : predict_first_kind(lo, hi)) {
        arr.push_back({{"n", p.n}, {"t", p.t_pred}, {"sigma", p.sigma_pred}, {"seed", first_kind_seed(p.n)}});
      }
      print(arr);
    } else if (*cert) {
      const CoeffTable t = build_table(1'000'000, par);
      const CertificateReport r = verify_theorem1(cert_x, cert_sigma, t, false);
      json samples = json::array();
      for (const auto& s : r.samples) {
        samples.push_back({{"sigma", s.sigma}, {"ineq1_margin", s.ineq1_margin},
                           {"ineq1_scaled_margin", s.ineq1_scaled_margin}, {"ineq2_margin", s.ineq2_margin},
                           {"ineq2_literal_margin", s.ineq2_literal_margin}, {"lower_bound", s.lower_bound},
                           {"lower_bound_margin", s.lb_margin}});
      }
      json cons = json::array();
      for (const auto& [s, m] : r.consequence_margins) cons.push_back({{"sigma", s}, {"margin", m}});
      json j{{"x", r.x}, {"sigma0", r.sigma0}, {"ineq1_margin", r.ineq1_margin}, {"ineq2_margin", r.ineq2_margin},
             {"ineq1_monotone", r.ineq1_monotone}, {"samples", samples}, {"series_margins", cons},
             {"valid", r.valid}};
      if (!r.valid) j["failure"] = r.failure;
      bool ok = r.valid;
      if (cert_constants) {
        const Theorem2Report t2 = verify_theorem2_constants(t, false);
        json checks = json::array();
        for (const auto& c : t2.checks) checks.push_back({{"name", c.name}, {"value", c.value}, {"bound", c.bound}, {"ok", c.ok}});
        j["constants"] = {{"checks", checks}, {"est1_argmax", t2.est1_argmax}, {"valid", t2.valid}};
        ok = ok && t2.valid;
      }
      print(j);
      if (!ok) {
        std::cerr << "certificate not established" << (r.valid ? "" : ": " + r.failure) << "\n";
        return 1;
      }
    } else if (*sten) {
      const double h = sten_h > 0.0 ? sten_h : cfg.grid_h;
      const StencilScheme sc = build_stencil(h);
      json c1 = json::array(), c2 = json::array(), off = json::array();
      for (int k = 0; k < 9; ++k) {
        off.push_back(cj(sc.offsets[k]));
        c1.push_back(cj(sc.c1[k]));
        c2.push_back(cj(sc.c2[k]));
      }
      json j{{"h", h}, {"offsets", off}, {"c1", c1}, {"c2", c2}, {"order", sc.order},
             {"moment_defect", moment_defect(sc)}};
      bool ok = true;
      if (sten_selftest) {
        const OrderReport o = stencil_order_exp({0.02, 0.01, 0.005});
        GridOptions go;
        go.parallel = par;
        go.probes = 0;
        const NuGrid g = grid_nu({-1.0, 3.0, 20.0, 24.0}, 0.04, go);
        const ProbeReport p = probe_grid(g, 20, 10);
        const std::int64_t budget = g.rows * g.cols + 2 * (g.rows + g.cols) - 4;
        ok = o.slope1 >= 7.0 && p.max_rel_err <= 1e-6 && g.zeta_evaluations <= budget;
        j["selftest"] = {{"h", o.h}, {"err1", o.err1}, {"err2", o.err2}, {"slope1", o.slope1},
                         {"slope2", o.slope2}, {"probe_max_rel_err", p.max_rel_err},
                         {"zeta_evaluations", g.zeta_evaluations}, {"evaluation_budget", budget}, {"ok", ok}};
      }
      print(j);
      if (!ok) {
        std::cerr << "stencil self-test failed\n";
        return 1;
      }
    } else if (*plot) {
      PlotOptions po;
      po.parallel = par;
      po.guides = !plot_no_guides;
      const Rectangle rect = parse_rect(plot_rect);
      PhasePlot pp = phase_plot(rect, plot_ppu, po);
      std::vector<ZeroRecord> marks;
      if (!plot_overlay.empty()) marks = read_overlay(plot_overlay);
      if (plot_zeros) {
        LocalizeOptions lo;
        lo.parallel = par;
        const auto found = localize({rect.sigma_min, rect.sigma_max, std::max(rect.t_min, kCensusTFloor), rect.t_max}, lo);
        marks.insert(marks.end(), found.zeros.begin(), found.zeros.end());
      }
      if (!marks.empty()) draw_overlay(pp.image, marks);
      const std::string out = plot_out.empty() ? in_dir(cfg, "phase.ppm") : plot_out;
      write_ppm(pp.image, out);
      if (!plot_grid_out.empty()) write_grid(pp.grid, plot_grid_out);
      print({{"out", out}, {"width", pp.image.width}, {"height", pp.image.height}, {"h", pp.grid.h},
             {"zeta_evaluations", pp.grid.zeta_evaluations}, {"marked", marks.size()}});
    } else if (*res) {
      const auto [lo, hi] = parse_pair(res_range);
      const auto curve = resurgence_curve(lo, hi, res_samples);
      const std::string out = res_out.empty() ? in_dir(cfg, "fig1.csv") : res_out;
      write_curve_csv(curve, out);
      print({{"out", out}, {"samples", res_samples}, {"extrema", local_extrema(curve)}});
    } else if (*all) {
      AcceptanceOptions ao;
      ao.parallel = par;
      ao.only = all_only;
      if (all_figures) ao.output_dir = cfg.output_dir;
      int red = 0;
      run_acceptance(ao, [&](const CriterionResult& r) {
        std::cout << format_row(r) << std::endl;
        red += r.pass ? 0 : 1;
      });
      std::cout << (red == 0 ? "all criteria pass" : std::to_string(red) + " criteria fail") << "\n";
      return red == 0 ? 0 : 1;
    }
  } catch (const Error& e) {
    // Flag values the library rejects are usage errors; everything else is a computation failure.
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::invalid_argument ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
