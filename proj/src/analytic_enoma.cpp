#include "nomamd/analytic_enoma.hpp"

#include <cmath>

#include "nomamd/errors.hpp"

namespace nomamd::analytic_enoma {

namespace {

// Neumaier-compensated accumulator for the alternating rank sums; the
// binomial-weighted cancellation grows with N.
struct Accum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + comp; }
};

// (N-m)! (-1)^{i-m} / ((m-1)! (i-m)!); exact in doubles for the small ranks
// used here.
double strong_coef(int n, int m, int i) {
  const double mag = std::tgamma(n - m + 1.0) /
                     (std::tgamma(static_cast<double>(m)) * std::tgamma(i - m + 1.0));
  return ((i - m) % 2 == 0) ? mag : -mag;
}

}  // namespace

double mtilde(int j, int i, const model::NetworkParams& params, double m_factor, double b,
              const specfun::Tolerance& tol) {
  const int n = params.n_users;
  if (j < 1 || i < j || i > n) throw DomainError("mtilde: need 1 <= j <= i <= N");
  const double f21 = specfun::hyp2f1_cov(b, params.delta(), m_factor, tol);
  return specfun::binomial(n - 1, j - 1) * n / (n - j + f21);
}

double moment(const model::NetworkParams& params, const model::Allocation& alloc, int i,
              double b, const specfun::Tolerance& tol) {
  const int n = params.n_users;
  if (i < 1 || i > n) throw DomainError("moment: rank out of range");
  if (!(b > 0.0)) throw DomainError("moment: b must be positive");
  const auto eff = model::effective_alloc(params, alloc);
  const double mi = eff.m_factors[i - 1];

  Accum acc;
  acc.add(mtilde(i, i, params, mi, b, tol));
  for (int m = 1; m <= i - 1; ++m) {
    acc.add(strong_coef(n, m, i) * mtilde(m, i, params, mi, b, tol));
  }
  return acc.value();
}

double pgfl(int i, const model::NetworkParams& params, const std::function<double(double)>& f,
            const quad::QuadratureConfig& qcfg) {
  const int n = params.n_users;
  if (i < 1 || i > n) throw DomainError("pgfl: rank out of range");
  // 2 int_1^inf (1 - f(1/y)) y dy  ->  2 int_0^1 (1 - f(u)) u^{-3} du
  const double inner = 2.0 * quad::integrate(
                                 [&](double u) { return (1.0 - f(u)) / (u * u * u); }, 0.0,
                                 1.0, qcfg);

  auto g_tilde = [&](int j) {
    return specfun::binomial(n - 1, j - 1) * n / ((n - j + 1) + inner);
  };

  Accum acc;
  acc.add(g_tilde(i));
  for (int m = 1; m <= i - 1; ++m) acc.add(strong_coef(n, m, i) * g_tilde(m));
  return acc.value();
}

}  // namespace nomamd::analytic_enoma
