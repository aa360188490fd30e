#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "zetanu/zeros.hpp"

using namespace zetanu;

namespace {

// Winding by brute force: uniform boundary samples, argument increments folded to (-pi, pi].
int dense_winding(const ComplexFn& f, const Rectangle& r, int per_side) {
  const cplx corners[5] = {{r.sigma_min, r.t_min}, {r.sigma_max, r.t_min}, {r.sigma_max, r.t_max},
                           {r.sigma_min, r.t_max}, {r.sigma_min, r.t_min}};
  double total = 0.0;
  cplx prev = f(corners[0]);
  for (int side = 0; side < 4; ++side) {
    for (int k = 1; k <= per_side; ++k) {
      const cplx v = f(corners[side] + (corners[side + 1] - corners[side]) * (double(k) / per_side));
      total += std::arg(v / prev);
      prev = v;
    }
  }
  return static_cast<int>(std::lround(total / (2 * kPi)));
}

cplx nu_of(cplx s) { return nu(s).nu; }

}  // namespace

TEST_CASE("winding agrees with a dense-sampling oracle") {
  const Rectangle boxes[] = {{4.25, 8.0, 0.5, 100.0}, {2.0, 3.0, -1.0, 1.0}, {-4.0, 5.0, 10.0, 30.0},
                             {0.2, 0.8, 13.5, 15.0}, {-3.0, -1.0, 0.5, 2.0}};
  for (const Rectangle& r : boxes) {
    CAPTURE(r.sigma_min);
    CAPTURE(r.t_min);
    // adaptive sampling starts at perimeter/400; the oracle uses ten times as many points
    const double step0 = std::max(0.05, r.perimeter() / 400.0);
    const int per_side = std::max(1000, static_cast<int>(10.0 * r.perimeter() / step0 / 4.0));
    CHECK(winding(r) == dense_winding(nu_of, r, per_side));
  }
  CHECK(winding({4.25, 8.0, 0.5, 100.0}) == 0);
  // at a simple zero of zeta, nu = -zeta'^2 != 0: no winding around 1/2 + 14.13i
  CHECK(winding({0.2, 0.8, 13.5, 15.0}) == 0);
}

TEST_CASE("pole at one") {
  const Rectangle r{0.9, 1.1, -0.1, 0.1};
  CHECK(winding(r) == -4);
  const ComplexFn log2nd = [](cplx s) { return nu(s).log2nd; };
  CHECK(winding_of(log2nd, r).winding == -2);
}

TEST_CASE("winding is additive over a partition") {
  const Rectangle r{-2.0, 3.0, 20.0, 40.0};
  const int whole = winding(r);
  const int parts = winding({-2.0, 0.37, 20.0, 29.3}) + winding({0.37, 3.0, 20.0, 29.3}) +
                    winding({-2.0, 0.37, 29.3, 40.0}) + winding({0.37, 3.0, 29.3, 40.0});
  CHECK(whole == parts);
}

TEST_CASE("edges through a zero are detected or perturbed") {
  const ComplexFn f = [](cplx s) { return (s - 0.5) * (s - cplx(2.0, 1.0)); };
  const Rectangle grazing{0.5, 1.0, -1.0, 1.0};
  CHECK_THROWS_AS(winding_fixed(f, grazing), Error);
  const WindingResult w = winding_of(f, grazing);
  CHECK(w.perturbations > 0);
  CHECK(w.rect.contains(0.5));
  CHECK(w.winding == 1);
  CHECK(winding_of(f, {0.0, 3.0, -2.0, 2.0}).winding == 2);
  CHECK_THROWS_AS(winding_of(f, {1.0, 0.0, 0.0, 1.0}), Error);
}

TEST_CASE("localize finds as many zeros as the outer winding") {
  const LocalizeResult lr = localize({-4.0, 5.0, 10.0, 50.0});
  CHECK(static_cast<int>(lr.zeros.size()) == lr.outer_winding);
  CHECK(lr.zeros.size() == 14);
  for (const auto& z : lr.zeros) {
    CAPTURE(z.location);
    CHECK(z.newton_residual <= 1e-8 * z.local_scale);
    CHECK(std::abs(nu(z.location).nu) <= 1e-8 * z.local_scale);
    CHECK(lr.rect.contains(z.location));
  }
  // simple zeros of zeta are not zeros of nu
  for (const auto& z : lr.zeros) CHECK(std::abs(zeta(z.location)) > 1e-6);
  for (std::size_t i = 1; i < lr.zeros.size(); ++i) CHECK(lr.zeros[i - 1].location.imag() <= lr.zeros[i].location.imag());
}

TEST_CASE("conjugate symmetry of the zero set") {
  const LocalizeResult up = localize({-4.0, 5.0, 10.0, 30.0}), down = localize({-4.0, 5.0, -30.0, -10.0});
  REQUIRE(up.zeros.size() == down.zeros.size());
  for (const auto& z : up.zeros) {
    double best = 1e300;
    for (const auto& w : down.zeros) best = std::min(best, std::abs(w.location - std::conj(z.location)));
    CHECK(best < 1e-9);
  }
}

TEST_CASE("serial and parallel subdivision agree") {
  LocalizeOptions s, p;
  s.parallel = false;
  p.parallel = true;
  const LocalizeResult a = localize({-4.0, 5.0, 10.0, 40.0}, s), b = localize({-4.0, 5.0, 10.0, 40.0}, p);
  REQUIRE(a.zeros.size() == b.zeros.size());
  for (std::size_t i = 0; i < a.zeros.size(); ++i) CHECK(std::abs(a.zeros[i].location - b.zeros[i].location) < 1e-12);
  CHECK(a.boxes == b.boxes);
}

TEST_CASE("Newton refinement") {
  const LocalizeResult lr = localize({-4.0, 5.0, 10.0, 20.0});
  REQUIRE(!lr.zeros.empty());
  const cplx target = lr.zeros.front().location;
  const auto z = newton_refine(target + cplx(0.03, -0.02));
  REQUIRE(z.has_value());
  CHECK(std::abs(z->location - target) < 1e-9);
  CHECK(!newton_refine(cplx(40.0, 3.0)).has_value());  // nu has no zeros out there
}

TEST_CASE("first-kind predictor") {
  CHECK(first_kind_seed(109) == doctest::Approx(994.853).epsilon(1e-6));
  CHECK(first_kind_seed(10) == doctest::Approx(9.065 * 10 + 6.80).epsilon(2e-3));
  const auto preds = predict_first_kind(100.0, 200.0);
  CHECK(preds.size() == 11);
  for (std::size_t i = 1; i < preds.size(); ++i) CHECK(preds[i].t_pred - preds[i - 1].t_pred == doctest::Approx(2 * kPi / kLog2).epsilon(1e-2));
  // model zero satisfies log(2)^2 u + 2^u = 0 with u = 1 - s
  for (const auto& p : preds) {
    const cplx u = 1.0 - cplx(p.sigma_pred, p.t_pred);
    CHECK(std::abs(kLog2 * kLog2 * u + std::exp(u * kLog2)) < 1e-9 * std::abs(u));
  }
  // and each prediction sits next to an actual first-kind zero
  const LocalizeResult lr = localize({-8.0, -2.0, 100.0, 200.0});
  std::set<int> hit;
  for (const auto& z : lr.zeros) {
    if (z.kind != ZeroKind::trivial_first_kind) continue;
    REQUIRE(z.predicted_from.has_value());
    hit.insert(*z.predicted_from);
    const auto p = predict_first_kind_n(*z.predicted_from);
    CHECK(std::abs(z.location - cplx(p.sigma_pred, p.t_pred)) < 0.5);
  }
  CHECK(hit.size() == preds.size());
  CHECK_THROWS_AS(predict_first_kind(5.0, 30.0), Error);
}

TEST_CASE("classification is stable under a tighter Newton tolerance") {
  LocalizeOptions tight;
  tight.newton_tol = 1e-9;
  const LocalizeResult a = localize({-9.5, 3.0, 0.5, 60.0}), b = localize({-9.5, 3.0, 0.5, 60.0}, tight);
  REQUIRE(a.zeros.size() == b.zeros.size());
  for (std::size_t i = 0; i < a.zeros.size(); ++i) CHECK(a.zeros[i].kind == b.zeros[i].kind);
}

TEST_CASE("classification rules") {
  CHECK(classify(cplx(0.5, 14.13)) == ZeroKind::nontrivial);
  CHECK(classify(cplx(-2.85, 1.06)) == ZeroKind::trivial_second_kind);
  const auto p = predict_first_kind_n(50);
  std::optional<int> from;
  CHECK(classify(cplx(p.sigma_pred + 0.3, p.t_pred), &from) == ZeroKind::trivial_first_kind);
  CHECK(from == 50);
  CHECK(classify(cplx(p.sigma_pred, -p.t_pred)) == ZeroKind::trivial_first_kind);
}

TEST_CASE("counting formula and census") {
  const double u = 100.0 / (2 * kPi);
  CHECK(count_formula(100.0) == doctest::Approx(2 * (u * std::log(u) - u) - std::log(2.0) / kPi * 100.0));
  CHECK(count_formula(100.0) == doctest::Approx(34.19).epsilon(1e-3));
  for (double T = 20.0; T < 500.0; T += 10.0) CHECK(count_formula(T + 10.0) > count_formula(T));
  const CensusReport c = census_compare(100.0);
  CHECK(std::abs(c.residual) <= 3.0 * std::log(100.0));
  CHECK(c.residual == doctest::Approx(c.n_computed - c.n_formula));
  CHECK_THROWS_AS(census_compare(10.0), Error);
}

TEST_CASE("density counts") {
  // nothing to the right of the zero-free line
  CHECK(density_count(60.0, 3.5) == 0);
  const LocalizeResult lr = localize({kCensusSigmaMin, kCensusSigmaMax, kCensusTFloor, 60.0});
  std::int64_t manual = 0;
  for (const auto& z : lr.zeros) manual += z.location.real() > 5.0 / 6.0 + 0.1 && z.location.imag() <= 60.0;
  CHECK(density_from(lr.zeros, 60.0, 0.1) == 2 * manual);
  CHECK(density_from(lr.zeros, 60.0, 0.1) >= density_from(lr.zeros, 40.0, 0.1));
  CHECK_THROWS_AS(density_count(60.0, 0.0), Error);
}
