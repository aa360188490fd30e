#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "zetanu/coeffs.hpp"
#include "zetanu/nu.hpp"

using namespace zetanu;

namespace {

const CoeffTable& table() {
  static const CoeffTable t = build_table(200'000);
  return t;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> d;
  for (std::int64_t k = 1; k <= n; ++k) if (n % k == 0) d.push_back(k);
  return d;
}

double mangoldt(std::int64_t n) {
  for (std::int64_t p = 2; p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
  }
  return 0.0;
}

}  // namespace

TEST_CASE("coefficients against trial-division divisor sums") {
  const CoeffTable& t = table();
  for (std::int64_t n = 1; n <= 3000; ++n) {
    CAPTURE(n);
    double a = 0.0, conv = 0.0;
    const auto ds = divisors(n);
    for (std::int64_t d : ds) {
      const double ld = std::log(static_cast<double>(d)), le = std::log(static_cast<double>(n / d));
      a += ld * ld - ld * le;
      conv += mangoldt(d) * ld * static_cast<double>(divisors(n / d).size());
    }
    CHECK(t.tau[n] == ds.size());
    CHECK(std::abs(t.lambda[n] - mangoldt(n)) < 1e-14);
    CHECK(std::abs(t.a[n] - a) <= 1e-11 * std::max(1.0, std::abs(a)));
    CHECK(std::abs(t.a[n] - conv) <= 1e-11 * std::max(1.0, std::abs(conv)));
  }
  for (std::int64_t n : {2310, 2048, 2999, 1999, 720}) {
    double a = 0.0;
    for (std::int64_t d : divisors(n)) {
      const double ld = std::log(static_cast<double>(d)), le = std::log(static_cast<double>(n / d));
      a += ld * ld - ld * le;
    }
    CHECK(std::abs(t.a[n] - a) <= 1e-11 * std::abs(a));
  }
}

TEST_CASE("coefficients are nonnegative and b follows from the binomial factor") {
  const CoeffTable& t = table();
  const double binom[5] = {1, 4, 6, 4, 1};
  for (std::int64_t n = 1; n <= 5000; ++n) {
    CHECK(t.a[n] >= -1e-12);
    double b = 0.0;
    std::int64_t m = n;
    for (int k = 0; k <= 4; ++k) {
      b += binom[k] * std::pow(-2.0, k) * t.a[m];
      if (m % 2) break;
      m /= 2;
    }
    CHECK(std::abs(t.b[n] - b) <= 1e-10 * std::max(1.0, std::abs(b)));
    CHECK(coeff_b(n, t) == t.b[n]);
  }
}

TEST_CASE("serial and OpenMP coefficient kernels are identical") {
  const auto s = log_divisor_coefficients(50'000, false);
  const auto p = log_divisor_coefficients(50'000, true);
  CHECK(s == p);
  const CoeffTable a = build_table(20'000, false), b = build_table(20'000, true);
  CHECK(a.a == b.a);
  CHECK(a.b == b.b);
}

TEST_CASE("summatory functions") {
  const CoeffTable& t = table();
  double A = 0.0, B = 0.0;
  for (std::int64_t n = 1; n <= 1000; ++n) {
    // A sums n < x, B sums n <= x
    CHECK(std::abs(summatory(static_cast<double>(n), Summatory::A, t) - A) < 1e-9);
    B += t.b[n];
    A += t.a[n];
    CHECK(std::abs(summatory(n + 0.5, Summatory::A, t) - A) < 1e-9);
    CHECK(std::abs(summatory(static_cast<double>(n), Summatory::B, t) - B) < 1e-9);
  }
  CHECK_THROWS_AS(summatory(1e7, Summatory::A, t), Error);
}

TEST_CASE("main-term cubic equals the residue of nu(s) x^s / s at s = 1") {
  const CubicP p = main_term_cubic();
  for (double x : {3.0, 50.0, 1e4}) {
    const int M = 256;
    const double r = 0.4;
    cplx acc = 0;
    for (int k = 0; k < M; ++k) {
      const cplx e = std::polar(1.0, 2.0 * kPi * k / M);
      const cplx s = 1.0 + r * e;
      acc += nu(s).nu * std::pow(x, s) / s * (r * e);  // ds/(2 pi i) = r e dtheta/(2 pi)
    }
    acc /= static_cast<double>(M);
    CAPTURE(x);
    CHECK(std::abs(acc.imag()) < 1e-9 * x);
    CHECK(std::abs(acc.real() - x * p(std::log(x))) < 1e-9 * x);
  }
}

TEST_CASE("fourth difference annihilates the cubic") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 20.0);
  std::vector<double> ts(100);
  for (double& v : ts) v = u(rng);
  CHECK(delta4_check(ts) < 1e-10);
  // a quartic is not annihilated: its fourth difference is 24 c log(2)^4
  CHECK(std::abs(delta4(main_term_cubic(), 3.0)) < 1e-11);
}

TEST_CASE("summatory residual stays below 10 sqrt(x) log^2 x") {
  const CoeffTable& t = table();
  for (int k = 0; k < 200; ++k) {
    const double x = 10.0 * std::pow(2e4, k / 199.0);
    const LemmaResidual lr = lemma_residual(x, t);
    CAPTURE(x);
    CHECK(std::abs(lr.residual) <= lr.bound);
    CHECK(lr.bound == doctest::Approx(10.0 * std::sqrt(x) * std::log(x) * std::log(x)));
  }
}

TEST_CASE("normalized residual sup against a scan of step endpoints") {
  const CoeffTable& t = table();
  const CubicP p = main_term_cubic();
  const double lo = 100.0, hi = 20'000.0, th = 0.433;
  const ResidualSup s = normalized_residual_sup(t, lo, hi, th);
  double best = 0.0;
  auto val = [&](double x) {
    return std::abs(summatory(x, Summatory::A, t) - x * p(std::log(x))) / std::pow(x, th);
  };
  best = std::max(val(lo), val(hi));
  for (std::int64_t n = 101; n <= 20'000; ++n) {
    best = std::max(best, val(static_cast<double>(n)));           // left end of a step
    best = std::max(best, val(std::nextafter(static_cast<double>(n), 1e9)));  // right after the jump
  }
  CHECK(s.value == doctest::Approx(best).epsilon(1e-9));
  CHECK(s.x >= lo);
  CHECK(s.x <= hi);
}

TEST_CASE("table limits") {
  CHECK_THROWS_AS(build_table(1), Error);
  CHECK_THROWS_AS(build_table(kMaxTableLimit + 1), Error);
  CHECK_THROWS_AS(coeff_b(0, table()), Error);
  CHECK_THROWS_AS(lemma_residual(1e9, table()), Error);
}
