#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "zetanu/types.hpp"

namespace zetanu {

/// Dirichlet coefficients of nu(s) = zeta zeta'' - zeta'^2 and of
/// phi(s) = (1 - 2^{1-s})^4 nu(s), indexed directly by n (entry 0 unused).
struct CoeffTable {
  std::int64_t limit = 0;
  std::vector<double> lambda;      // von Mangoldt
  std::vector<std::uint32_t> tau;  // divisor count
  std::vector<double> a;
  std::vector<double> b;
  std::vector<long double> prefix_a;  // sum_{m <= n} a(m)
  std::vector<long double> prefix_b;  // sum_{m <= n} b(m)
};

inline constexpr std::int64_t kMaxTableLimit = 100'000'000;

/// Sieves lambda and tau, builds a(n) as the convolution (lambda log) * tau, and checks every
/// entry against the log-divisor-sum formula. Throws formula_mismatch on disagreement.
CoeffTable build_table(std::int64_t N, bool parallel = true);

/// a(n) = sum_{d|n} log(d)^2 - log(d) log(n/d), n <= N. The OpenMP path splits the output
/// range into blocks; the serial path is the reference.
std::vector<double> log_divisor_coefficients(std::int64_t N, bool parallel);

double coeff_b(std::int64_t n, const CoeffTable& table);

enum class Summatory { A, B };

/// A(x) = sum_{n < x} a(n); B(x) = sum_{n <= x} b(n).
double summatory(double x, Summatory which, const CoeffTable& table);

/// Cubic with x p(log x) the main term of A(x).
struct CubicP {
  std::array<double, 4> c{};  // c[k] multiplies t^k

  double operator()(double t) const { return ((c[3] * t + c[2]) * t + c[1]) * t + c[0]; }
};

CubicP main_term_cubic();

/// (I - E)^4 p at t with E p(t) = p(t - log 2).
double delta4(const CubicP& p, double t);

/// max |Delta^4 p| over the given sample points.
double delta4_check(std::span<const double> samples);

struct LemmaResidual {
  double residual = 0.0;
  double bound = 0.0;
};

/// A(x) - x p(log x) against 10 sqrt(x) log(x)^2.
LemmaResidual lemma_residual(double x, const CoeffTable& table);

struct ResidualSup {
  double x = 0.0;
  double value = 0.0;
};

/// sup over real x in [x_lo, x_hi] of |A(x) - x p(log x)| / x^theta. A is a step function and
/// the normalised residual is decreasing between steps, so both ends of every step are checked.
ResidualSup normalized_residual_sup(const CoeffTable& table, double x_lo, double x_hi,
                                    double theta);

}  // namespace zetanu
