#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include "zetanu/stencil.hpp"

namespace zetanu {

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) fail(Errc::invalid_argument, "loglog_slope");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= x.size();
  my /= y.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

OrderReport stencil_order_exp(const std::vector<double>& hs, cplx z) {
  using C = boost::multiprecision::cpp_complex_50;
  const C off[9] = {C(0, 0), C(1, 0),  C(-1, 0), C(0, 1),  C(0, -1),
                    C(1, 1), C(1, -1), C(-1, 1), C(-1, -1)};
  Eigen::Matrix<C, 9, 9> V;
  for (int k = 0; k < 9; ++k) {
    C p = 1;
    for (int j = 0; j < 9; ++j) {
      V(j, k) = p;
      p *= off[k];
    }
  }
  Eigen::Matrix<C, 9, 1> e1 = Eigen::Matrix<C, 9, 1>::Zero(), e2 = e1;
  e1(1) = 1;
  e2(2) = 2;
  const auto lu = V.partialPivLu();
  const Eigen::Matrix<C, 9, 1> w1 = lu.solve(e1), w2 = lu.solve(e2);

  OrderReport rep;
  const C zz(z.real(), z.imag());
  const C exact = exp(zz);
  for (double hd : hs) {
    if (!(hd >= 1e-6 && hd <= 0.1)) fail(Errc::invalid_argument, "stencil step must lie in [1e-6, 0.1]");
    const C h = hd;
    C d1 = 0, d2 = 0;
    for (int k = 0; k < 9; ++k) {
      const C f = exp(zz + h * off[k]);
      d1 += w1(k) * f;
      d2 += w2(k) * f;
    }
    d1 /= h;
    d2 /= h * h;
    rep.h.push_back(hd);
    rep.err1.push_back(static_cast<double>(abs(d1 - exact)));
    rep.err2.push_back(static_cast<double>(abs(d2 - exact)));
  }
  if (hs.size() >= 2) {
    rep.slope1 = loglog_slope(rep.h, rep.err1);
    rep.slope2 = loglog_slope(rep.h, rep.err2);
  }
  return rep;
}

}  // namespace zetanu
