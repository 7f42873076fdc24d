#include "nomamd/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "nomamd/errors.hpp"
#include "nomamd/specfun.hpp"

namespace nomamd::model {

using std::numbers::pi;

const char* scheme_name(Scheme s) { return s == Scheme::ENoma ? "enoma" : "cnoma"; }

NetworkParams::NetworkParams(double lambda_, double eta_, double beta_sic_, int n_users_)
    : lambda(lambda_), eta(eta_), beta_sic(beta_sic_), n_users(n_users_) {
  if (!(lambda > 0.0)) throw DomainError("NetworkParams: lambda must be positive");
  if (!(eta > 2.0)) throw DomainError("NetworkParams: eta must exceed 2");
  if (!(beta_sic >= 0.0 && beta_sic <= 1.0))
    throw DomainError("NetworkParams: beta_sic must lie in [0,1]");
  if (n_users < 1) throw DomainError("NetworkParams: n_users must be at least 1");
}

Allocation::Allocation(std::vector<double> powers_, std::vector<double> thresholds_)
    : powers(std::move(powers_)), thresholds(std::move(thresholds_)) {
  if (powers.empty() || powers.size() != thresholds.size())
    throw DomainError("Allocation: powers and thresholds must be non-empty and equal-length");
  double sum = 0.0;
  for (double p : powers) {
    if (!(p > 0.0)) throw DomainError("Allocation: powers must be positive");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw DomainError("Allocation: powers must sum to 1 (got " + std::to_string(sum) + ")");
  for (double t : thresholds) {
    if (!(t > 0.0)) throw DomainError("Allocation: thresholds must be positive");
  }
}

EffectiveAlloc effective_alloc(const NetworkParams& params, const Allocation& alloc) {
  const int n = alloc.size();
  if (n != params.n_users)
    throw DomainError("effective_alloc: allocation size does not match n_users");
  const double beta = params.beta_sic;

  std::vector<double> tilde_p(n);
  double prefix = 0.0;  // sum_{m<j} P_m
  double total = 0.0;
  for (double p : alloc.powers) total += p;
  for (int j = 0; j < n; ++j) {
    const double suffix = total - prefix - alloc.powers[j];  // sum_{k>j} P_k
    tilde_p[j] = alloc.powers[j] - alloc.thresholds[j] * (prefix + beta * suffix);
    if (!(tilde_p[j] > 0.0)) {
      throw InfeasibleAllocation("effective_alloc: non-positive margin P~_" +
                                 std::to_string(j + 1) + " = " + std::to_string(tilde_p[j]));
    }
    prefix += alloc.powers[j];
  }

  std::vector<double> m(n);
  double running = 0.0;
  for (int i = n - 1; i >= 0; --i) {
    running = std::max(running, alloc.thresholds[i] / tilde_p[i]);
    m[i] = running;
  }
  return EffectiveAlloc{std::move(tilde_p), std::move(m)};
}

double unordered_pdf_enoma(const NetworkParams& params, double r) {
  if (!(r >= 0.0)) throw DomainError("unordered_pdf_enoma: r must be nonnegative");
  return 2.0 * pi * params.lambda * r * std::exp(-pi * params.lambda * r * r);
}

double unordered_cdf_enoma(const NetworkParams& params, double r) {
  if (!(r >= 0.0)) throw DomainError("unordered_cdf_enoma: r must be nonnegative");
  return -std::expm1(-pi * params.lambda * r * r);
}

double nn_distance_pdf(const NetworkParams& params, double x) {
  if (!(x >= 0.0)) throw DomainError("nn_distance_pdf: x must be nonnegative");
  return 2.0 * pi * params.lambda * x * std::exp(-pi * params.lambda * x * x);
}

double nn_distance_cdf(const NetworkParams& params, double x) {
  if (!(x >= 0.0)) throw DomainError("nn_distance_cdf: x must be nonnegative");
  return -std::expm1(-pi * params.lambda * x * x);
}

double nn_distance_quantile(const NetworkParams& params, double q) {
  if (!(q >= 0.0 && q < 1.0)) throw DomainError("nn_distance_quantile: q must lie in [0,1)");
  return std::sqrt(-std::log1p(-q) / (pi * params.lambda));
}

DistanceLaw enoma_law(const NetworkParams& params) {
  return DistanceLaw{[params](double r) { return unordered_pdf_enoma(params, r); },
                     [params](double r) { return unordered_cdf_enoma(params, r); }};
}

DistanceLaw cnoma_law(double rho) {
  if (!(rho > 0.0)) throw DomainError("cnoma_law: rho must be positive");
  return DistanceLaw{[rho](double r) {
                       if (!(r >= 0.0)) throw DomainError("cnoma pdf: r must be nonnegative");
                       return r <= rho / 2.0 ? 8.0 * r / (rho * rho) : 0.0;
                     },
                     [rho](double r) {
                       if (!(r >= 0.0)) throw DomainError("cnoma cdf: r must be nonnegative");
                       if (r >= rho / 2.0) return 1.0;
                       return 4.0 * r * r / (rho * rho);
                     }};
}

namespace {

void check_rank(int i, int n, const char* caller) {
  if (n < 1 || i < 1 || i > n)
    throw DomainError(std::string(caller) + ": rank must satisfy 1 <= i <= n");
}

}  // namespace

double ordered_pdf(int i, int n, const DistanceLaw& base, double r) {
  check_rank(i, n, "ordered_pdf");
  const double f = base.pdf(r);
  const double F = base.cdf(r);
  return specfun::binomial(n - 1, i - 1) * n * f * std::pow(F, i - 1) *
         std::pow(1.0 - F, n - i);
}

double ordered_pdf_weak_expansion(int i, int n, const DistanceLaw& base, double r) {
  check_rank(i, n, "ordered_pdf_weak_expansion");
  const double f = base.pdf(r);
  const double F = base.cdf(r);
  // f_hat_j = C(n-1,j-1) n f F^{j-1}
  auto f_hat = [&](int j) { return specfun::binomial(n - 1, j - 1) * n * f * std::pow(F, j - 1); };
  double sum = f_hat(i);
  int sign = -1;
  for (int m = i + 1; m <= n; ++m) {
    sum += sign * specfun::binomial(m - 1, i - 1) * f_hat(m);
    sign = -sign;
  }
  return sum;
}

double ordered_pdf_strong_expansion(int i, int n, const DistanceLaw& base, double r) {
  check_rank(i, n, "ordered_pdf_strong_expansion");
  const double f = base.pdf(r);
  const double F = base.cdf(r);
  // f_tilde_j = C(n-1,j-1) n f (1-F)^{n-j}
  auto f_tilde = [&](int j) {
    return specfun::binomial(n - 1, j - 1) * n * f * std::pow(1.0 - F, n - j);
  };
  double sum = f_tilde(i);
  for (int m = 1; m <= i - 1; ++m) {
    const double coef = std::tgamma(n - m + 1.0) / (std::tgamma(static_cast<double>(m)) *
                                                    std::tgamma(i - m + 1.0));
    const int sign = ((i - m) % 2 == 0) ? 1 : -1;
    sum += sign * coef * f_tilde(m);
  }
  return sum;
}

double ordered_pdf_cnoma(int i, int n, double rho, double r) {
  check_rank(i, n, "ordered_pdf_cnoma");
  if (!(rho > 0.0)) throw DomainError("ordered_pdf_cnoma: rho must be positive");
  if (!(r >= 0.0)) throw DomainError("ordered_pdf_cnoma: r must be nonnegative");
  if (r > rho / 2.0) return 0.0;
  const double u = 4.0 * r * r / (rho * rho);
  return specfun::binomial(n - 1, i - 1) * (8.0 * r * n / (rho * rho)) * std::pow(u, i - 1) *
         std::pow(1.0 - u, n - i);
}

}  // namespace nomamd::model
