#pragma once

#include <array>
#include <string>
#include <vector>

#include "zetanu/coeffs.hpp"

namespace zetanu {

/// integral_x^inf t^{-sigma} log(t)^k dt = x^{1-sigma} sum_j k!/(k-j)! log(x)^{k-j} / (sigma-1)^{j+1}.
double log_power_tail(double x, double sigma, int k);

struct TailIntegrals {
  double poly_tail = 0.0;  // sigma * integral_x^inf p(log t) t^{-sigma} dt
  double sqrt_tail = 0.0;  // 10 sigma * integral_x^inf log(t)^2 t^{-sigma-1/2} dt
};

TailIntegrals tail_integrals(double x, double sigma);

/// q_1..q_4 and r_1..r_3 with
///   x^sigma * poly_tail = x p(log x) + sum_j q_j/(sigma-1)^j,
///   x^sigma * sqrt_tail = sqrt(x) (10 log(x)^2 + sum_i r_i/(sigma-1/2)^i).
struct TailPolynomials {
  std::array<double, 5> q{};  // q[1..4]
  std::array<double, 4> r{};  // r[1..3]
};

TailPolynomials tail_polynomials(double x);

struct SigmaSample {
  double sigma = 0.0;
  double ineq1_margin = 0.0;         // a(2)/2^s - sum_{3<=n<x} a(n)/n^s - 1.5/x^{s/2}
  double ineq1_scaled_margin = 0.0;  // a(2) - sum a(n)(2/n)^s - 1.5 (2/sqrt x)^s
  double ineq2_margin = 0.0;         // x^{s/2} - RHS of the second inequality
  double ineq2_literal_margin = 0.0; // same with sqrt(x) multiplying the q_j terms as well
  double lower_bound = 0.0;          // the summation-by-parts lower bound for |nu|
  double lb_margin = 0.0;            // lower_bound - 0.5/x^{s/2}
};

struct CertificateReport {
  double sigma0 = 0.0;
  double x = 0.0;
  double ineq1_margin = 0.0;  // at sigma0
  double ineq2_margin = 0.0;  // at sigma0
  std::vector<SigmaSample> samples;
  bool ineq1_monotone = false;  // scaled margin nondecreasing over the samples
  /// Full-series check a(2)/2^s - sum_{n>=3} a(n)/n^s - 0.5/40^{s/2} at sigma = 4.25, 5, 6: the
  /// series is summed over the table and the remainder bounded through the tail integrals.
  std::vector<std::pair<double, double>> consequence_margins;
  bool valid = false;
  std::string failure;  // first violated inequality, if any
};

/// Checks both inequalities at sigma0 and at the larger of {5, 7, 10, 20}. With `strict`, a
/// violation throws certificate_failed.
CertificateReport verify_theorem1(double x, double sigma0, const CoeffTable& table,
                                  bool strict = true);

/// Upper bound for sum_{n >= N} a(n) n^{-sigma} from A(t) <= t p(log t) + 10 sqrt(t) log(t)^2.
double series_tail_bound(std::int64_t N, double sigma, const CoeffTable& table);

struct ConstantCheck {
  std::string name;
  double value = 0.0;   // computed quantity
  double bound = 0.0;   // the constant it is compared with
  bool ok = false;
};

struct Theorem2Report {
  std::vector<ConstantCheck> checks;
  double est1_max = 0.0;        // sup of the trigamma/cosecant expression over the t samples
  double est1_argmax = 0.0;
  double est2_lower = 0.0;      // log(2)^2/32 - sum_{n>=3} Lambda(n) log(n)/n^5
  double quotient_max = 0.0;    // sampled max |zeta^2/nu| on Re = 5
  double product_bound = 0.0;   // (1/140) * 135
  double re_factor_t1000 = 0.0; // Re(1 + W zeta^2/nu) at 5 - 1000i
  bool valid = false;
};

/// |psi'(5-it) - (pi/2)^2 csc^2(pi(4+it)/2)|.
double est1_value(double t);

/// Checks the constants 0.0025, 1/140, 0.0075, 135 and the product bound. With `strict`, a
/// violation throws constant_violated naming the constant.
Theorem2Report verify_theorem2_constants(const CoeffTable& table, bool strict = true);

struct DensityConstant {
  double x0 = 0.0;
  double inf_abs_phi = 0.0;
  double at_t = 0.0;
  double A = 0.0;  // 2 * inf |phi|
};

/// Sampled inf of |(1 - 2^{1-s})^4 nu(s)| on Re(s) = x0, |t| <= t_max.
DensityConstant density_constant(double x0 = 4.5, double t_max = 1000.0, double dt = 0.05);

}  // namespace zetanu
