#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "zetanu/certificate.hpp"
#include "zetanu/nu.hpp"

using namespace zetanu;

namespace {

const CoeffTable& table() {
  static const CoeffTable t = build_table(1'000'000);
  return t;
}

double quad_tail(double x, double sigma, int k, double shift = 0.0) {
  boost::math::quadrature::exp_sinh<double> q;
  // integral over t in [x, inf) of t^{-sigma} log(t)^k, substituting t = x + u
  return q.integrate([&](double u) {
    const double t = x + u;
    return std::pow(t, -sigma - shift) * std::pow(std::log(t), k);
  });
}

}  // namespace

TEST_CASE("log-power tails against numerical quadrature") {
  for (double x : {4.0, 10.0, 40.0, 1e3, 1e5}) {
    for (double sigma : {1.5, 2.25, 4.25, 7.0}) {
      for (int k = 0; k <= 3; ++k) {
        CAPTURE(x);
        CAPTURE(sigma);
        CAPTURE(k);
        const double ref = quad_tail(x, sigma, k);
        CHECK(log_power_tail(x, sigma, k) == doctest::Approx(ref).epsilon(1e-9));
      }
    }
  }
  CHECK(log_power_tail(5.0, 3.0, 0) == doctest::Approx(std::pow(5.0, -2.0) / 2.0));
}

TEST_CASE("tail integrals and their polynomial form") {
  const CubicP p = main_term_cubic();
  for (double x : {4.0, 40.0, 500.0}) {
    const TailPolynomials tp = tail_polynomials(x);
    for (double sigma : {2.0, 4.25, 9.0}) {
      const TailIntegrals ti = tail_integrals(x, sigma);
      double poly = 0.0;
      for (int k = 0; k <= 3; ++k) poly += p.c[k] * quad_tail(x, sigma, k);
      CHECK(ti.poly_tail == doctest::Approx(sigma * poly).epsilon(1e-9));
      CHECK(ti.sqrt_tail == doctest::Approx(10.0 * sigma * quad_tail(x, sigma, 2, 0.5)).epsilon(1e-9));

      double qs = 0.0, rs = 0.0;
      for (int j = 1; j <= 4; ++j) qs += tp.q[j] / std::pow(sigma - 1.0, j);
      for (int i = 1; i <= 3; ++i) rs += tp.r[i] / std::pow(sigma - 0.5, i);
      const double L = std::log(x), xs = std::pow(x, sigma);
      CHECK(xs * ti.poly_tail == doctest::Approx(x * p(L) + qs).epsilon(1e-10));
      CHECK(xs * ti.sqrt_tail == doctest::Approx(std::sqrt(x) * (10.0 * L * L + rs)).epsilon(1e-10));
    }
  }
  const TailPolynomials tp = tail_polynomials(4.0);
  for (int j = 1; j <= 4; ++j) CHECK(tp.q[j] > 0.0);
  for (int i = 1; i <= 3; ++i) CHECK(tp.r[i] > 0.0);
  CHECK(tp.q[4] == doctest::Approx(4.0 * 6.0 * main_term_cubic().c[3]));
}

TEST_CASE("series tail bound dominates the actual tail") {
  const CoeffTable& t = table();
  for (double sigma : {4.25, 5.0, 8.0}) {
    for (std::int64_t N : {1'000, 10'000, 100'000}) {
      double partial = 0.0;
      for (std::int64_t n = t.limit; n >= N; --n) partial += t.a[n] * std::pow(static_cast<double>(n), -sigma);
      CAPTURE(sigma);
      CAPTURE(N);
      CHECK(series_tail_bound(N, sigma, t) >= partial);
      CHECK(series_tail_bound(N, sigma, t) < 20.0 * partial + 1e-300);
    }
  }
}

TEST_CASE("certificate at (40, 4.25)") {
  const CertificateReport r = verify_theorem1(40.0, 4.25, table());
  CHECK(r.valid);
  CHECK(r.ineq1_margin > 0.0);
  CHECK(r.ineq2_margin > 0.0);
  CHECK(r.ineq1_monotone);
  REQUIRE(r.samples.size() == 5);
  for (const auto& s : r.samples) {
    CAPTURE(s.sigma);
    CHECK(s.ineq1_margin > 0.0);
    CHECK(s.ineq2_margin > 0.0);
    CHECK(s.lb_margin > 0.0);
  }
  // the literal reading of the second inequality (sqrt(x) on every term) fails here
  CHECK(r.samples.front().ineq2_literal_margin < 0.0);
  REQUIRE(r.consequence_margins.size() == 3);
  for (const auto& [s, m] : r.consequence_margins) CHECK(m > 0.0);

  // the head sum by hand
  const CoeffTable& t = table();
  double head = t.a[2] * std::pow(2.0, -4.25);
  for (int n = 3; n < 40; ++n) head -= t.a[n] * std::pow(double(n), -4.25);
  CHECK(r.ineq1_margin == doctest::Approx(head - 1.5 * std::pow(40.0, -2.125)));
}

TEST_CASE("the lower bound really bounds |nu|") {
  const CertificateReport r = verify_theorem1(40.0, 4.25, table());
  for (const auto& s : r.samples) {
    for (double t : {0.0, 3.3, 17.0, 250.0, 4000.0}) CHECK(std::abs(nu(cplx(s.sigma, t)).nu) >= s.lower_bound);
  }
}

TEST_CASE("certificate failures") {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::io_error;
  };
  CHECK(code([] { verify_theorem1(40.0, 3.0, table()); }) == Errc::certificate_failed);
  const CertificateReport r = verify_theorem1(40.0, 3.0, table(), false);
  CHECK(!r.valid);
  CHECK(r.failure.find("first inequality") != std::string::npos);
  CHECK(code([] { verify_theorem1(40.0, 1.0, table()); }) == Errc::divergent);
  CHECK(code([] { verify_theorem1(3.0, 4.25, table()); }) == Errc::out_of_range);
  CHECK(code([] { log_power_tail(10.0, 0.5, 1); }) == Errc::divergent);
}

TEST_CASE("constants of the counting argument") {
  const Theorem2Report r = verify_theorem2_constants(table());
  CHECK(r.valid);
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CHECK(c.ok);
  }
  CHECK(r.est1_max < 1.0 / 140.0);
  CHECK(r.est2_lower >= 0.0075);
  CHECK(r.quotient_max < 135.0);
  CHECK(r.product_bound < 1.0);
  CHECK(r.re_factor_t1000 > 0.0);
  CHECK(est1_value(150.0) < 1.0 / 140.0);
  CHECK(est1_value(150.0) > est1_value(1000.0));  // decays like 1/t
}

TEST_CASE("density constant") {
  const DensityConstant d = density_constant(4.5, 200.0, 0.1);
  CHECK(d.A == doctest::Approx(2.0 * d.inf_abs_phi));
  CHECK(d.A > 0.0);
  const cplx s(4.5, d.at_t);
  CHECK(std::abs(std::pow(1.0 - std::exp((1.0 - s) * kLog2), 4) * nu(s).nu) == doctest::Approx(d.inf_abs_phi));
  CHECK_THROWS_AS(density_constant(4.0), Error);
}
