#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "nomamd/errors.hpp"

namespace nomamd::quad {

struct QuadratureConfig {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  double rho_cutoff_quantile = 1.0 - 1e-10;  // truncation of the rho expectation
  int max_subdivisions = 15;

  QuadratureConfig tightened(double factor) const {
    QuadratureConfig c = *this;
    c.rel_tol /= factor;
    return c;
  }
};

// Adaptive Gauss-Kronrod on [a, b].  Throws NumericFailure when the error
// estimate cannot be brought under the requested tolerances (e.g. a
// non-integrable integrand).
template <class F>
double integrate(F&& f, double a, double b, const QuadratureConfig& cfg = {}) {
  if (!(a <= b)) throw DomainError("integrate: need a <= b");
  if (a == b) return 0.0;
  double err = 0.0;
  double l1 = 0.0;
  const double result = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      f, a, b, cfg.max_subdivisions, cfg.rel_tol, &err, &l1);
  if (!std::isfinite(result) ||
      (err > cfg.abs_tol && err > 10.0 * cfg.rel_tol * std::max(std::abs(result), l1))) {
    throw NumericFailure("integrate: adaptive Gauss-Kronrod failed to converge");
  }
  return result;
}

}  // namespace nomamd::quad
