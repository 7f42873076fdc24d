#include "nomamd/analytic_cnoma.hpp"

#include <cmath>
#include <numbers>

#include "nomamd/errors.hpp"

namespace nomamd::analytic_cnoma {

using std::numbers::pi;

namespace {

double weak_coef(int m, int i) {
  const double mag = specfun::binomial(m - 1, i - 1);
  return ((m - i) % 2 == 0) ? mag : -mag;
}

}  // namespace

double moment_exact(const model::NetworkParams& params, const model::Allocation& alloc, int i,
                    double b, const quad::QuadratureConfig& qcfg) {
  const int n = params.n_users;
  if (i < 1 || i > n) throw DomainError("moment_exact: rank out of range");
  if (!(b > 0.0)) throw DomainError("moment_exact: b must be positive");
  const auto eff = model::effective_alloc(params, alloc);
  const double mi = eff.m_factors[i - 1];
  const double eta = params.eta;
  const double delta = params.delta();
  const double lam = params.lambda;

  const double rho_max = model::nn_distance_quantile(params, qcfg.rho_cutoff_quantile);
  const quad::QuadratureConfig inner_cfg = qcfg.tightened(10.0);

  auto inner = [&](double rho) {
    auto integrand = [&](double r) {
      const double guard = rho - r;  // r <= rho/2, so guard >= rho/2 > 0
      const double x = mi * std::pow(r / guard, eta);
      const double interference =
          std::exp(-pi * lam * guard * guard * (specfun::hyp2f1_cov(b, delta, x) - 1.0));
      const double rho_bs = std::pow(1.0 + mi * std::pow(r / rho, eta), -b);
      return model::ordered_pdf_cnoma(i, n, rho, r) * interference * rho_bs;
    };
    return quad::integrate(integrand, 0.0, rho / 2.0, inner_cfg);
  };

  return quad::integrate(
      [&](double rho) { return model::nn_distance_pdf(params, rho) * inner(rho); }, 0.0,
      rho_max, qcfg);
}

double moment_approx(const model::NetworkParams& params, const model::Allocation& alloc, int i,
                     double b, const quad::QuadratureConfig& qcfg) {
  const int n = params.n_users;
  if (i < 1 || i > n) throw DomainError("moment_approx: rank out of range");
  if (!(b > 0.0)) throw DomainError("moment_approx: b must be positive");
  const auto eff = model::effective_alloc(params, alloc);
  const double mi = eff.m_factors[i - 1];
  const double lam = params.lambda;

  // The hypergeometric argument is -M_i for every term, independent of rho.
  const double c = specfun::hyp2f1_cov(b, params.delta(), mi) - 1.0;
  const double rho_max = model::nn_distance_quantile(params, qcfg.rho_cutoff_quantile);

  auto mhat = [&](int j) {
    return quad::integrate(
        [&](double rho) {
          const double x = pi * lam * rho * rho / 4.0 * c;
          return model::nn_distance_pdf(params, rho) * specfun::binomial(n - 1, j - 1) * n *
                 specfun::lower_inc_gamma_ratio(j, x);
        },
        0.0, rho_max, qcfg);
  };

  double sum = mhat(i);
  for (int m = i + 1; m <= n; ++m) sum += weak_coef(m, i) * mhat(m);
  return sum;
}

double pgfl_given_rho(int i, const model::NetworkParams& params, double rho,
                      const std::function<double(double)>& f,
                      const quad::QuadratureConfig& qcfg) {
  const int n = params.n_users;
  if (i < 1 || i > n) throw DomainError("pgfl_given_rho: rank out of range");
  if (!(rho > 0.0)) throw DomainError("pgfl_given_rho: rho must be positive");

  // int_1^inf (1 - f(1/y)) y dy  ->  int_0^1 (1 - f(u)) u^{-3} du
  const double iy =
      quad::integrate([&](double u) { return (1.0 - f(u)) / (u * u * u); }, 0.0, 1.0, qcfg);
  const double x = pi * params.lambda * rho * rho * iy / 2.0;

  auto g_hat = [&](int j) {
    return specfun::binomial(n - 1, j - 1) * n * specfun::lower_inc_gamma_ratio(j, x);
  };

  double sum = g_hat(i);
  for (int m = i + 1; m <= n; ++m) sum += weak_coef(m, i) * g_hat(m);
  return sum;
}

}  // namespace nomamd::analytic_cnoma
