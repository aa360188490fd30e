#include "zetanu/coeffs.hpp"

#include <omp.h>

#include <algorithm>
#include <string>

#include "zetanu/special.hpp"

namespace zetanu {

namespace {

std::vector<double> log_table(std::int64_t N) {
  std::vector<double> lg(N + 1, 0.0);
  for (std::int64_t n = 2; n <= N; ++n) lg[n] = std::log(static_cast<double>(n));
  return lg;
}

// Adds the divisor-sum terms log(d)^2 - log(d) log(n/d) for outputs n in [lo, hi), taking the
// divisors of n in pairs d * e = n with d <= e so a block only scans d < sqrt(hi).
void log_divisor_block(const std::vector<double>& lg, std::int64_t lo, std::int64_t hi,
                       std::vector<double>& out) {
  for (std::int64_t d = 1; d * d < hi; ++d) {
    const double ld = lg[d];
    for (std::int64_t e = std::max(d + 1, (lo + d - 1) / d), n = d * e; n < hi; ++e, n += d) {
      const double le = lg[e];
      out[n] += ld * (ld - le) + le * (le - ld);
    }
  }
}

}  // namespace

std::vector<double> log_divisor_coefficients(std::int64_t N, bool parallel) {
  if (N < 1) fail(Errc::invalid_argument, "log_divisor_coefficients: N < 1");
  const std::vector<double> lg = log_table(N);
  std::vector<double> out(N + 1, 0.0);
  if (!parallel) {
    log_divisor_block(lg, 1, N + 1, out);
    return out;
  }
  // Each block touches only its own outputs, so blocks run independently.
  const std::int64_t blocks = std::max<std::int64_t>(1, std::min<std::int64_t>(N / 4096, 256));
  const std::int64_t width = (N + blocks) / blocks;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < blocks; ++k) {
    const std::int64_t lo = std::max<std::int64_t>(1, k * width);
    const std::int64_t hi = std::min<std::int64_t>(N + 1, (k + 1) * width);
    if (lo < hi) log_divisor_block(lg, lo, hi, out);
  }
  return out;
}

CoeffTable build_table(std::int64_t N, bool parallel) {
  if (N < 2 || N > kMaxTableLimit) {
    fail(Errc::invalid_argument, "build_table: N must lie in [2, 1e8], got " + std::to_string(N));
  }
  CoeffTable t;
  t.limit = N;
  t.lambda.assign(N + 1, 0.0);
  t.tau.assign(N + 1, 0);
  t.a.assign(N + 1, 0.0);
  t.b.assign(N + 1, 0.0);

  // Linear sieve for the smallest prime factor, then tau and Lambda from n = p^e * rest.
  {
    std::vector<std::uint32_t> spf(N + 1, 0), rest(N + 1, 1);
    std::vector<std::uint8_t> expo(N + 1, 0);
    std::vector<std::uint32_t> primes;
    for (std::int64_t n = 2; n <= N; ++n) {
      if (spf[n] == 0) {
        spf[n] = static_cast<std::uint32_t>(n);
        primes.push_back(static_cast<std::uint32_t>(n));
      }
      for (std::uint32_t p : primes) {
        const std::int64_t q = static_cast<std::int64_t>(p) * n;
        if (p > spf[n] || q > N) break;
        spf[q] = p;
      }
    }
    t.tau[1] = 1;
    for (std::int64_t n = 2; n <= N; ++n) {
      const std::uint32_t p = spf[n];
      const std::int64_t m = n / p;
      if (m > 1 && spf[m] == p) {
        expo[n] = static_cast<std::uint8_t>(expo[m] + 1);
        rest[n] = rest[m];
      } else {
        expo[n] = 1;
        rest[n] = static_cast<std::uint32_t>(m);
      }
      t.tau[n] = t.tau[rest[n]] * (expo[n] + 1u);
      if (rest[n] == 1) t.lambda[n] = std::log(static_cast<double>(p));
    }
  }

  // a = (Lambda log) * tau, summing over prime powers d only.
  for (std::int64_t d = 2; d <= N; ++d) {
    if (t.lambda[d] == 0.0) continue;
    const double w = t.lambda[d] * std::log(static_cast<double>(d));
    for (std::int64_t m = 1, n = d; n <= N; ++m, n += d) t.a[n] += w * t.tau[m];
  }

  const std::vector<double> check = log_divisor_coefficients(N, parallel);
  for (std::int64_t n = 1; n <= N; ++n) {
    if (std::abs(check[n] - t.a[n]) > 1e-9 * (1.0 + t.a[n])) {
      fail(Errc::formula_mismatch, "a(" + std::to_string(n) + "): " + std::to_string(check[n]) +
                                       " vs " + std::to_string(t.a[n]));
    }
  }

  static constexpr double kBinom[5] = {1, 4, 6, 4, 1};
  for (std::int64_t n = 1; n <= N; ++n) {
    double v = 0.0, sign = 1.0;
    std::int64_t k = n;
    for (int m = 0; m <= 4; ++m) {
      v += kBinom[m] * sign * t.a[k];
      if (k % 2 != 0) break;
      k /= 2;
      sign *= -2.0;
    }
    t.b[n] = v;
  }

  t.prefix_a.assign(N + 1, 0.0L);
  t.prefix_b.assign(N + 1, 0.0L);
  for (std::int64_t n = 1; n <= N; ++n) {
    t.prefix_a[n] = t.prefix_a[n - 1] + t.a[n];
    t.prefix_b[n] = t.prefix_b[n - 1] + t.b[n];
  }
  return t;
}

double coeff_b(std::int64_t n, const CoeffTable& table) {
  if (n < 1 || n > table.limit) fail(Errc::out_of_range, "coeff_b: n = " + std::to_string(n));
  return table.b[n];
}

double summatory(double x, Summatory which, const CoeffTable& table) {
  if (!std::isfinite(x) || x > static_cast<double>(table.limit)) {
    fail(Errc::out_of_range, "summatory: x = " + std::to_string(x));
  }
  if (which == Summatory::A) {
    const double last = std::ceil(x) - 1.0;  // n < x
    if (last < 1.0) return 0.0;
    return static_cast<double>(table.prefix_a[static_cast<std::int64_t>(last)]);
  }
  const double last = std::floor(x);  // n <= x
  if (last < 1.0) return 0.0;
  return static_cast<double>(table.prefix_b[static_cast<std::int64_t>(last)]);
}

CubicP main_term_cubic() {
  const auto& g = constants().stieltjes;
  const double C0 = g[0], C1 = g[1], C2 = g[2];
  CubicP p;
  p.c[3] = 1.0 / 6.0;
  p.c[2] = C0 - 0.5;
  p.c[1] = 1.0 - 4.0 * C1 - 2.0 * C0;
  p.c[0] = 4.0 * C2 + 4.0 * C1 + 2.0 * C0 - 1.0;
  return p;
}

double delta4(const CubicP& p, double t) {
  static constexpr double kBinom[5] = {1, 4, 6, 4, 1};
  double v = 0.0, sign = 1.0;
  for (int m = 0; m <= 4; ++m, sign = -sign) v += kBinom[m] * sign * p(t - m * kLog2);
  return v;
}

double delta4_check(std::span<const double> samples) {
  const CubicP p = main_term_cubic();
  double worst = 0.0;
  for (double t : samples) worst = std::max(worst, std::abs(delta4(p, t)));
  return worst;
}

LemmaResidual lemma_residual(double x, const CoeffTable& table) {
  if (!(x >= 4.0) || x > static_cast<double>(table.limit)) {
    fail(Errc::out_of_range, "lemma_residual: x = " + std::to_string(x));
  }
  const double L = std::log(x);
  const CubicP p = main_term_cubic();
  return {summatory(x, Summatory::A, table) - x * p(L), 10.0 * std::sqrt(x) * L * L};
}

ResidualSup normalized_residual_sup(const CoeffTable& table, double x_lo, double x_hi,
                                    double theta) {
  if (!(x_lo >= 1.0) || !(x_hi > x_lo) || x_hi > static_cast<double>(table.limit)) {
    fail(Errc::out_of_range, "normalized_residual_sup: bad range");
  }
  const CubicP p = main_term_cubic();
  ResidualSup best;
  auto probe = [&](double x, long double S) {
    if (x < x_lo || x > x_hi) return;
    const double v = std::abs(static_cast<double>(S) - x * p(std::log(x))) / std::pow(x, theta);
    if (v > best.value) best = {x, v};
  };
  // On (n, n+1] the sum is prefix_a[n]; evaluate just right of n and at n+1.
  const auto first = static_cast<std::int64_t>(std::floor(x_lo));
  const auto last = static_cast<std::int64_t>(std::ceil(x_hi));
  for (std::int64_t n = std::max<std::int64_t>(first, 1); n < last; ++n) {
    const long double S = table.prefix_a[n];
    probe(std::max(static_cast<double>(n), x_lo), S);
    probe(std::min(static_cast<double>(n + 1), x_hi), S);
  }
  return best;
}

}  // namespace zetanu
