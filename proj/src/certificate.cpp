#include "zetanu/certificate.hpp"

#include <limits>
#include <sstream>

#include "zetanu/nu.hpp"

namespace zetanu {

namespace {

// k!/(k-j)! log(x)^{k-j}
double falling(int k, int j, double L) {
  if (j < 0 || j > k) return 0.0;
  double f = 1.0;
  for (int m = 0; m < j; ++m) f *= (k - m);
  return f * std::pow(L, k - j);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// a(2)/2^s - sum_{3 <= n < x} a(n)/n^s
double head_sum(double x, double sigma, const CoeffTable& table) {
  double acc = table.a[2] * std::pow(2.0, -sigma);
  const auto last = static_cast<std::int64_t>(std::ceil(x)) - 1;
  for (std::int64_t n = 3; n <= last; ++n) acc -= table.a[n] * std::pow(static_cast<double>(n), -sigma);
  return acc;
}

}  // namespace

double log_power_tail(double x, double sigma, int k) {
  if (!(sigma > 1.0)) fail(Errc::divergent, "log_power_tail: needs sigma > 1");
  if (!(x >= 1.0) || k < 0) fail(Errc::invalid_argument, "log_power_tail: needs x >= 1, k >= 0");
  const double L = std::log(x), d = sigma - 1.0;
  double acc = 0.0;
  for (int j = 0; j <= k; ++j) acc += falling(k, j, L) / std::pow(d, j + 1);
  return std::pow(x, 1.0 - sigma) * acc;
}

TailIntegrals tail_integrals(double x, double sigma) {
  if (!(sigma > 1.0)) fail(Errc::divergent, "tail_integrals: needs sigma > 1");
  if (!(x >= 4.0)) fail(Errc::invalid_argument, "tail_integrals: needs x >= 4");
  const CubicP p = main_term_cubic();
  TailIntegrals out;
  for (int k = 0; k <= 3; ++k) out.poly_tail += p.c[k] * log_power_tail(x, sigma, k);
  out.poly_tail *= sigma;
  out.sqrt_tail = 10.0 * sigma * log_power_tail(x, sigma + 0.5, 2);
  return out;
}

TailPolynomials tail_polynomials(double x) {
  if (!(x >= 1.0)) fail(Errc::invalid_argument, "tail_polynomials: needs x >= 1");
  const CubicP p = main_term_cubic();
  const double L = std::log(x);
  TailPolynomials tp;
  // sigma/(sigma-1)^{j+1} = 1/(sigma-1)^j + 1/(sigma-1)^{j+1}
  for (int j = 1; j <= 4; ++j) {
    double acc = 0.0;
    for (int k = 0; k <= 3; ++k) acc += p.c[k] * (falling(k, j, L) + falling(k, j - 1, L));
    tp.q[j] = x * acc;
  }
  // sigma/(sigma-1/2)^{i+1} = 1/(sigma-1/2)^i + (1/2)/(sigma-1/2)^{i+1}
  for (int i = 1; i <= 3; ++i) tp.r[i] = 10.0 * (falling(2, i, L) + 0.5 * falling(2, i - 1, L));
  return tp;
}

double series_tail_bound(std::int64_t N, double sigma, const CoeffTable& table) {
  if (N < 4 || N > table.limit) fail(Errc::out_of_range, "series_tail_bound: N outside the table");
  const TailIntegrals ti = tail_integrals(static_cast<double>(N), sigma);
  const double AN = summatory(static_cast<double>(N), Summatory::A, table);
  return ti.poly_tail + ti.sqrt_tail - AN * std::pow(static_cast<double>(N), -sigma);
}

CertificateReport verify_theorem1(double x, double sigma0, const CoeffTable& table, bool strict) {
  if (!(x >= 4.0) || x > static_cast<double>(table.limit)) {
    fail(Errc::out_of_range, "verify_theorem1: need 4 <= x <= table limit");
  }
  if (!(sigma0 > 1.0)) fail(Errc::divergent, "verify_theorem1: sigma0 must exceed 1");
  CertificateReport rep;
  rep.x = x;
  rep.sigma0 = sigma0;

  std::vector<double> sigmas{sigma0};
  for (double s : {5.0, 7.0, 10.0, 20.0}) if (s > sigma0) sigmas.push_back(s);

  const TailPolynomials tp = tail_polynomials(x);
  const CubicP p = main_term_cubic();
  const double L = std::log(x), sx = std::sqrt(x);
  const double Ax = summatory(x, Summatory::A, table);

  for (double s : sigmas) {
    SigmaSample sm;
    sm.sigma = s;
    const double head = head_sum(x, s, table);
    sm.ineq1_margin = head - 1.5 * std::pow(x, -0.5 * s);
    sm.ineq1_scaled_margin = head * std::pow(2.0, s) - 1.5 * std::pow(2.0 / sx, s);

    double qsum = 0.0, rsum = 0.0;
    for (int j = 1; j <= 4; ++j) qsum += tp.q[j] / std::pow(s - 1.0, j);
    for (int i = 1; i <= 3; ++i) rsum += tp.r[i] / std::pow(s - 0.5, i);
    const double lhs = std::pow(x, 0.5 * s);
    const double base = x * p(L) + 10.0 * sx * L * L - Ax;
    sm.ineq2_margin = lhs - (base + qsum + sx * rsum);
    sm.ineq2_literal_margin = lhs - (base + sx * (qsum + rsum));

    const TailIntegrals ti = tail_integrals(x, s);
    sm.lower_bound = head + Ax * std::pow(x, -s) - ti.poly_tail - ti.sqrt_tail;
    sm.lb_margin = sm.lower_bound - 0.5 * std::pow(x, -0.5 * s);
    rep.samples.push_back(sm);
  }
  rep.ineq1_margin = rep.samples.front().ineq1_margin;
  rep.ineq2_margin = rep.samples.front().ineq2_margin;

  rep.ineq1_monotone = true;
  for (std::size_t i = 1; i < rep.samples.size(); ++i) {
    if (rep.samples[i].ineq1_scaled_margin < rep.samples[i - 1].ineq1_scaled_margin) rep.ineq1_monotone = false;
  }

  const std::int64_t N = table.limit;
  for (double s : {4.25, 5.0, 6.0}) {
    double acc = table.a[2] * std::pow(2.0, -s);
    for (std::int64_t n = 3; n < N; ++n) acc -= table.a[n] * std::pow(static_cast<double>(n), -s);
    acc -= series_tail_bound(N, s, table);
    rep.consequence_margins.emplace_back(s, acc - 0.5 * std::pow(40.0, -0.5 * s));
  }

  rep.valid = true;
  for (const auto& sm : rep.samples) {
    if (!(sm.ineq1_margin > 0.0)) {
      rep.failure = "first inequality at sigma = " + fmt(sm.sigma) + " (margin " + fmt(sm.ineq1_margin) + ")";
    } else if (!(sm.ineq2_margin > 0.0)) {
      rep.failure = "second inequality at sigma = " + fmt(sm.sigma) + " (margin " + fmt(sm.ineq2_margin) + ")";
    } else {
      continue;
    }
    rep.valid = false;
    break;
  }
  if (!rep.valid && strict) fail(Errc::certificate_failed, rep.failure);
  return rep;
}

double est1_value(double t) {
  const cplx s(4.0, t);  // 1 - s = -3 - it, the weight is taken at 5 - it
  return std::abs(trigamma(cplx(5.0, -t)) - 0.25 * kPi * kPi * csc2_half_pi(s));
}

Theorem2Report verify_theorem2_constants(const CoeffTable& table, bool strict) {
  if (table.limit < 1000) fail(Errc::out_of_range, "verify_theorem2_constants: table too small");
  Theorem2Report rep;
  const std::int64_t N = table.limit;
  const double a2 = table.a[2];

  // 1 - sum_{n>=3} (a(n)/a(2)) (2/n)^5 > 0.0025, with the table remainder bounded by the tail integrals.
  {
    double acc = 0.0;
    for (std::int64_t n = 3; n < N; ++n) acc += table.a[n] * std::pow(2.0 / static_cast<double>(n), 5.0);
    acc += std::pow(2.0, 5.0) * series_tail_bound(N, 5.0, table);
    const double v = 1.0 - acc / a2;
    rep.checks.push_back({"head_ratio_0.0025", v, 0.0025, v > 0.0025});
  }

  // The trigamma/cosecant expression on a grid of t in [150, 1e4].
  for (double t = 150.0; t <= 1e4; t += 0.25) {
    const double v = est1_value(t);
    if (v > rep.est1_max) {
      rep.est1_max = v;
      rep.est1_argmax = t;
    }
  }
  rep.checks.push_back({"trigamma_csc_1/140", rep.est1_max, 1.0 / 140.0, rep.est1_max < 1.0 / 140.0});

  // log(2)^2/32 - sum Lambda(n) log(n)/n^5: Lambda(n) log(n) <= log(n)^2, so the remainder is below the log^2 tail integral.
  {
    double acc = 0.0;
    for (std::int64_t n = 3; n <= N; ++n) {
      if (table.lambda[n] != 0.0) acc += table.lambda[n] * std::log(static_cast<double>(n)) * std::pow(static_cast<double>(n), -5.0);
    }
    acc += log_power_tail(static_cast<double>(N), 5.0, 2);
    rep.est2_lower = kLog2 * kLog2 / 32.0 - acc;
    rep.checks.push_back({"prime_sum_0.0075", rep.est2_lower, 0.0075, rep.est2_lower >= 0.0075});
  }

  // |zeta^2/nu| on Re = 5, and the product with est1 for t >= 150.
  double prod_max = 0.0;
  for (double t = 0.0; t <= 1e4; t += 1.0) {
    const NuValue v = nu(cplx(5.0, -t));
    const double q = 1.0 / std::abs(v.log2nd);
    rep.quotient_max = std::max(rep.quotient_max, q);
    if (t >= 150.0) prod_max = std::max(prod_max, q * est1_value(t));
  }
  rep.checks.push_back({"quotient_135", rep.quotient_max, 135.0, rep.quotient_max < 135.0 && 1.0 / 0.0075 < 135.0});
  rep.product_bound = 135.0 / 140.0;
  rep.checks.push_back({"product_below_1", std::max(rep.product_bound, prod_max), 1.0,
                        rep.product_bound < 1.0 && prod_max < 1.0});

  {
    const cplx s(-4.0, 1000.0), u = 1.0 - s;
    const NuValue v = nu(u);
    rep.re_factor_t1000 = (1.0 + reflection_weight(s) / v.log2nd).real();
    rep.checks.push_back({"re_factor_t1000", rep.re_factor_t1000, 0.0, rep.re_factor_t1000 > 0.0});
  }

  rep.valid = true;
  for (const auto& c : rep.checks) {
    if (c.ok) continue;
    rep.valid = false;
    if (strict) fail(Errc::constant_violated, c.name + ": " + fmt(c.value) + " vs " + fmt(c.bound));
  }
  return rep;
}

DensityConstant density_constant(double x0, double t_max, double dt) {
  if (!(x0 > 4.25)) fail(Errc::invalid_argument, "density_constant: x0 must exceed 4.25");
  if (!(dt > 0.0) || !(t_max > 0.0) || t_max > kMaxImag) fail(Errc::invalid_argument, "density_constant: bad sampling");
  DensityConstant dc;
  dc.x0 = x0;
  dc.inf_abs_phi = std::numeric_limits<double>::infinity();
  // phi(conj s) = conj phi(s), so t >= 0 suffices.
  const auto steps = static_cast<std::int64_t>(std::floor(t_max / dt));
  for (std::int64_t k = 0; k <= steps; ++k) {
    const cplx s(x0, static_cast<double>(k) * dt);
    const cplx f = std::pow(1.0 - std::exp((1.0 - s) * kLog2), 4) * nu(s).nu;
    const double v = std::abs(f);
    if (v < dc.inf_abs_phi) {
      dc.inf_abs_phi = v;
      dc.at_t = s.imag();
    }
  }
  dc.A = 2.0 * dc.inf_abs_phi;
  return dc;
}

}  // namespace zetanu
