#include "zetanu/special.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <type_traits>

namespace zetanu {

const char* to_string(EvalMethod m) noexcept {
  switch (m) {
    case EvalMethod::euler_maclaurin: return "euler_maclaurin";
    case EvalMethod::dirichlet_series: return "dirichlet_series";
    case EvalMethod::reflected: return "reflected";
    case EvalMethod::stencil: return "stencil";
  }
  return "?";
}

namespace {

using boost::multiprecision::cpp_rational;

// Akiyama-Tanigawa in exact rationals.
std::vector<cpp_rational> bernoulli_exact(int nmax) {
  std::vector<cpp_rational> a(nmax + 1), out(nmax + 1);
  for (int m = 0; m <= nmax; ++m) {
    a[m] = cpp_rational(1, m + 1);
    for (int j = m; j >= 1; --j) a[j - 1] = j * (a[j - 1] - a[j]);
    out[m] = a[0];
  }
  return out;
}

const std::vector<cpp_rational>& bernoulli_table() {
  static const std::vector<cpp_rational> table = bernoulli_exact(60);
  return table;
}

ConstantsSet make_constants() {
  ConstantsSet c;
  const auto& b = bernoulli_table();
  for (int n = 2; n <= 60; n += 2) c.bernoulli.push_back(static_cast<double>(b[n]));
  c.stieltjes = {0.57721566490153286061, -0.07281584548367672486, -0.00969036319287231848};
  return c;
}

// B_{2k}/(2k)! for the Euler-Maclaurin corrections, k = 1..30.
const std::vector<long double>& em_coefficients() {
  static const std::vector<long double> coef = [] {
    const auto& b = bernoulli_table();
    std::vector<long double> out;
    cpp_rational fact = 1;
    for (int n = 1; n <= 60; ++n) {
      fact *= n;
      if (n % 2 == 0) {
        cpp_rational q = b[n] / fact;
        out.push_back(static_cast<long double>(q));
      }
    }
    return out;
  }();
  return coef;
}

const std::vector<double>& log_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t(static_cast<std::size_t>(kMaxImag / 2 + 64));
    for (std::size_t n = 1; n < t.size(); ++n) t[n] = std::log(static_cast<double>(n));
    return t;
  }();
  return table;
}

template <class Real>
Real log_of(int n) {
  if constexpr (std::is_same_v<Real, double>) {
    const auto& t = log_table();
    if (static_cast<std::size_t>(n) < t.size()) return t[n];
  }
  return std::log(static_cast<Real>(n));
}

// Term-wise differentiated Euler-Maclaurin for zeta, zeta', zeta''.
template <class Real>
EvalBundle em_kernel(cplx s_in, int order, int N, int K) {
  using C = std::complex<Real>;
  const C s(s_in.real(), s_in.imag());
  C z0 = 0, z1 = 0, z2 = 0;
  Real sq_sum = 0;
  for (int n = 1; n < N; ++n) {
    const Real ln = log_of<Real>(n);
    const C term = std::exp(-s * ln);
    z0 += term;
    if (order >= 1) z1 -= ln * term;
    if (order >= 2) z2 += ln * ln * term;
    const Real mag = std::abs(term) * (1 + std::abs(s) * ln);
    sq_sum += mag * mag;
  }
  const Real L = std::log(static_cast<Real>(N));
  const C n_pow = std::exp(-s * L);  // N^{-s}
  const C sm1 = s - Real(1);
  const C A = static_cast<Real>(N) * n_pow / sm1;  // N^{1-s}/(s-1)
  z0 += A + n_pow / Real(2);
  z1 += -L * A - A / sm1 - L * n_pow / Real(2);
  z2 += L * L * A + Real(2) * L * A / sm1 + Real(2) * A / (sm1 * sm1) + L * L * n_pow / Real(2);

  const auto& coef = em_coefficients();
  C P = s, P1 = Real(1), P2 = Real(0);  // prod_{j=0}^{2k-2}(s+j) and its derivatives
  C E = n_pow / static_cast<Real>(N);    // N^{-s-2k+1}
  const Real inv_n2 = Real(1) / (static_cast<Real>(N) * static_cast<Real>(N));
  Real last = 0;
  for (int k = 1; k <= K; ++k) {
    const Real c = coef[k - 1];
    const C t0 = c * P * E;
    z0 += t0;
    if (order >= 1) z1 += c * (P1 - L * P) * E;
    if (order >= 2) z2 += c * (P2 - Real(2) * L * P1 + L * L * P) * E;
    last = std::abs(t0) * (1 + L * L);
    for (int j = 2 * k - 1; j <= 2 * k; ++j) {
      const C f = s + static_cast<Real>(j);
      P2 = P2 * f + Real(2) * P1;
      P1 = P1 * f + P;
      P = P * f;
    }
    E *= inv_n2;
  }
  EvalBundle out;
  out.zeta = cplx(static_cast<double>(z0.real()), static_cast<double>(z0.imag()));
  out.zeta1 = cplx(static_cast<double>(z1.real()), static_cast<double>(z1.imag()));
  out.zeta2 = cplx(static_cast<double>(z2.real()), static_cast<double>(z2.imag()));
  out.method = EvalMethod::euler_maclaurin;
  // Rounding: per-term relative error grows with |s| log n; errors add like a random walk.
  const Real eps = std::numeric_limits<Real>::epsilon();
  out.est_abs_err = static_cast<double>(last + 2 * eps * std::sqrt(sq_sum)) +
                    std::numeric_limits<double>::denorm_min();
  return out;
}

// integral_x^inf log(t)^2 t^{-sigma} dt, sigma > 1.
double log2_tail_integral(double x, double sigma) {
  const double L = std::log(x), d = sigma - 1.0;
  return std::pow(x, 1.0 - sigma) * (L * L / d + 2.0 * L / (d * d) + 2.0 / (d * d * d));
}

// Plain partial sum of the Dirichlet series; tail bounded by the integral test.
EvalBundle series_kernel(cplx s, int order, int N, double tail_bound) {
  cplx z0 = 0, z1 = 0, z2 = 0;
  double abs_sum = 0;
  for (int n = 1; n <= N; ++n) {
    const double ln = log_of<double>(n);
    const cplx term = std::exp(-s * ln);
    z0 += term;
    if (order >= 1) z1 -= ln * term;
    if (order >= 2) z2 += ln * ln * term;
    abs_sum += std::abs(term);
  }
  EvalBundle out{z0, z1, z2, EvalMethod::dirichlet_series,
                 tail_bound + 8 * std::numeric_limits<double>::epsilon() * abs_sum};
  return out;
}

// Smallest power-of-two N whose series tail is below 1e-17 * 2^-sigma, or 0 if none below cap.
int series_truncation(double sigma, int cap) {
  if (sigma < 2.0) return 0;
  const double target = 1e-17 * std::exp2(-sigma);
  for (int N = 16; N < cap; N *= 2) {
    if (log2_tail_integral(N, sigma) <= target) return N;
  }
  return 0;
}

void check_domain(cplx s, const char* where) {
  require_finite(s, where);
  if (s == cplx(1.0, 0.0)) fail(Errc::pole_at_one, where);
  if (std::abs(s.imag()) > kMaxImag) fail(Errc::range_exceeded, where);
}

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

}  // namespace

double ConstantsSet::B(int n) const {
  if (n < 2 || n > 60 || n % 2 != 0) fail(Errc::out_of_range, "Bernoulli index");
  return bernoulli[n / 2 - 1];
}

const ConstantsSet& constants() {
  static const ConstantsSet c = make_constants();
  return c;
}

namespace {

// Smallest N <= cap whose 30th Euler-Maclaurin correction (with log^2 N slack) is below 1e-18.
int left_truncation(cplx s, int cap) {
  const auto& coef = em_coefficients();
  const int K = 30;
  double log_p = 0.0;
  for (int j = 0; j <= 2 * K - 2; ++j) log_p += std::log(std::abs(s + static_cast<double>(j)));
  const double log_c = std::log(std::abs(static_cast<double>(coef[K - 1])));
  for (int N = 8; N < cap; ++N) {
    const double L = std::log(static_cast<double>(N));
    const double log_term = log_c + log_p - (s.real() + 2 * K - 1) * L + 2.0 * std::log1p(L);
    if (log_term < std::log(1e-18)) return N;
  }
  return cap;
}

}  // namespace

std::pair<std::string, std::string> bernoulli_rational(int n) {
  if (n < 0 || n > 60) fail(Errc::out_of_range, "Bernoulli index");
  const auto& q = bernoulli_table()[n];
  return {boost::multiprecision::numerator(q).str(), boost::multiprecision::denominator(q).str()};
}

int default_truncation(double t) {
  return std::max(static_cast<int>(std::ceil(std::abs(t) / 2.0)) + 20, 50);
}

EvalBundle zeta_derivs_em(cplx s, int order, const EvalOptions& opts) {
  check_domain(s, "zeta_derivs");
  if (order < 0 || order > 2) fail(Errc::invalid_argument, "derivative order must be 0, 1 or 2");
  const int N = opts.em_truncation > 0 ? opts.em_truncation : default_truncation(s.imag());
  const int K = std::clamp(opts.bernoulli_terms, 1, 30);
  if (opts.allow_series_shortcut && opts.em_truncation == 0) {
    if (int M = series_truncation(s.real(), N); M > 0) {
      return series_kernel(s, order, M, log2_tail_integral(M, s.real()));
    }
  }
  if (s.real() < 0.0) {
    // Partial-sum terms grow like n^{-sigma} and cancel; keep N as small as the remainder allows.
    if (opts.em_truncation > 0) return em_kernel<long double>(s, order, N, K);
    return em_kernel<long double>(s, order, left_truncation(s, N), 30);
  }
  return em_kernel<double>(s, order, N, K);
}

EvalBundle zeta_derivs(cplx s, int order, const EvalOptions& opts) {
  check_domain(s, "zeta_derivs");
  if (order < 0 || order > 2) fail(Errc::invalid_argument, "derivative order must be 0, 1 or 2");
  if (s.real() >= 0.0) return zeta_derivs_em(s, order, opts);

  // zeta(s) = chi(s) g(s) with g(s) = zeta(1-s).
  const EvalBundle r = zeta_derivs_em(1.0 - s, order, opts);
  const ChiDerivs c = chi_derivs(s);
  const cplx g = r.zeta, g1 = -r.zeta1, g2 = r.zeta2;
  EvalBundle out;
  out.zeta = c.chi * g;
  out.zeta1 = c.chi1 * g + c.chi * g1;
  out.zeta2 = c.chi2 * g + 2.0 * c.chi1 * g1 + c.chi * g2;
  out.method = EvalMethod::reflected;
  out.est_abs_err = std::abs(c.chi) * r.est_abs_err +
                    1e-14 * std::abs(out.zeta) + std::numeric_limits<double>::denorm_min();
  return out;
}

cplx zeta(cplx s, const EvalOptions& opts) { return zeta_derivs(s, 0, opts).zeta; }

// ---------------------------------------------------------------------------
// Gamma family

namespace {

int shift_count(cplx z) {
  return z.real() > 10.0 ? 0 : static_cast<int>(std::ceil(10.0 - z.real())) + 1;
}

}  // namespace

cplx log_gamma(cplx z) {
  require_finite(z, "log_gamma");
  if (is_nonpositive_integer(z)) fail(Errc::pole_at_nonpositive_integer, "log_gamma");
  const int m = shift_count(z);
  cplx shift = 0;
  for (int j = 0; j < m; ++j) shift += std::log(z + static_cast<double>(j));
  const cplx w = z + static_cast<double>(m);
  const auto& c = constants();
  const cplx inv = 1.0 / w, inv2 = inv * inv;
  cplx series = 0, p = inv;
  for (int k = 1; k <= 15; ++k) {
    series += c.B(2 * k) / (2.0 * k * (2.0 * k - 1.0)) * p;
    p *= inv2;
  }
  return (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * kPi) + series - shift;
}

cplx digamma(cplx z) {
  require_finite(z, "digamma");
  if (is_nonpositive_integer(z)) fail(Errc::pole_at_nonpositive_integer, "digamma");
  const int m = shift_count(z);
  cplx shift = 0;
  for (int j = 0; j < m; ++j) shift += 1.0 / (z + static_cast<double>(j));
  const cplx w = z + static_cast<double>(m);
  const auto& c = constants();
  const cplx inv2 = 1.0 / (w * w);
  cplx series = 0, p = inv2;
  for (int k = 1; k <= 15; ++k) {
    series += c.B(2 * k) / (2.0 * k) * p;
    p *= inv2;
  }
  return std::log(w) - 0.5 / w - series - shift;
}

cplx trigamma(cplx z) {
  require_finite(z, "trigamma");
  if (is_nonpositive_integer(z)) fail(Errc::pole_at_nonpositive_integer, "trigamma");
  const int m = shift_count(z);
  cplx shift = 0;
  for (int j = 0; j < m; ++j) {
    const cplx q = z + static_cast<double>(j);
    shift += 1.0 / (q * q);
  }
  const cplx w = z + static_cast<double>(m);
  const auto& c = constants();
  const cplx inv = 1.0 / w, inv2 = inv * inv;
  cplx series = 0, p = inv2 * inv;
  for (int k = 1; k <= 15; ++k) {
    series += c.B(2 * k) * p;
    p *= inv2;
  }
  return inv + 0.5 * inv2 + series + shift;
}

// ---------------------------------------------------------------------------
// chi(s) = 2 (2 pi)^{s-1} sin(pi s/2) Gamma(1-s) = pi^{s-1/2} Gamma((1-s)/2) / Gamma(s/2)

cplx csc2_half_pi(cplx s) {
  const cplx z = 0.5 * kPi * s;
  const cplx I(0.0, 1.0);
  const cplx q = z.imag() >= 0.0 ? std::exp(2.0 * I * z) : std::exp(-2.0 * I * z);
  return -4.0 * q / ((q - 1.0) * (q - 1.0));
}

cplx sec2_half_pi(cplx s) {
  const cplx z = 0.5 * kPi * s;
  const cplx I(0.0, 1.0);
  const cplx q = z.imag() >= 0.0 ? std::exp(2.0 * I * z) : std::exp(-2.0 * I * z);
  return 4.0 * q / ((q + 1.0) * (q + 1.0));
}

cplx cot_half_pi(cplx s) {
  const cplx z = 0.5 * kPi * s;
  const cplx I(0.0, 1.0);
  if (z.imag() >= 0.0) {
    const cplx q = std::exp(2.0 * I * z);
    return I * (q + 1.0) / (q - 1.0);
  }
  const cplx q = std::exp(-2.0 * I * z);
  return -I * (q + 1.0) / (q - 1.0);
}

cplx log_chi(cplx s) {
  require_finite(s, "log_chi");
  return (s - 0.5) * std::log(kPi) + log_gamma(0.5 * (1.0 - s)) - log_gamma(0.5 * s);
}

cplx chi(cplx s) { return std::exp(log_chi(s)); }

std::vector<cplx> log_chi_path(std::span<const cplx> path) {
  std::vector<cplx> out;
  out.reserve(path.size());
  for (std::size_t k = 0; k < path.size(); ++k) {
    cplx v = log_chi(path[k]);
    if (k > 0) {
      const double d = v.imag() - out.back().imag();
      const double turns = std::round(d / (2.0 * kPi));
      const double rest = d - 2.0 * kPi * turns;
      if (std::abs(rest) > 0.5 * kPi) {
        fail(Errc::branch_tracking_failure,
             "argument jump " + std::to_string(rest) + " between consecutive path points");
      }
      v -= cplx(0.0, 2.0 * kPi * turns);
    }
    out.push_back(v);
  }
  return out;
}

ChiDerivs chi_derivs(cplx s) {
  require_finite(s, "chi_derivs");
  const cplx u = 1.0 - s;
  const double log2pi = std::log(2.0 * kPi);
  if (std::abs(s.imag()) < 50.0) {
    // Product form; sin(pi s/2) stays bounded here and removes 0*inf at even integers.
    const cplx G = std::exp(kLog2 + (s - 1.0) * log2pi + log_gamma(u));
    const cplx g1 = log2pi - digamma(u);
    const cplx g2 = g1 * g1 + trigamma(u);
    const cplx S = std::sin(0.5 * kPi * s);
    const cplx S1 = 0.5 * kPi * std::cos(0.5 * kPi * s);
    const cplx S2 = -0.25 * kPi * kPi * S;
    return {G * S, G * (g1 * S + S1), G * (g2 * S + 2.0 * g1 * S1 + S2)};
  }
  const cplx c = chi(s);
  const cplx L1 = log2pi + 0.5 * kPi * cot_half_pi(s) - digamma(u);
  const cplx L2 = -0.25 * kPi * kPi * csc2_half_pi(s) + trigamma(u);
  return {c, c * L1, c * (L1 * L1 + L2)};
}

}  // namespace zetanu
