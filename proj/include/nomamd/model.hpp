#pragma once

#include <functional>
#include <vector>

namespace nomamd::model {

enum class Scheme { ENoma, CNoma };

const char* scheme_name(Scheme s);

// Network-level parameters.  delta = 2/eta is always derived, never stored.
struct NetworkParams {
  double lambda;    // BS intensity per unit area, > 0
  double eta;       // path-loss exponent, > 2
  double beta_sic;  // residual intracell interference fraction, in [0,1]
  int n_users;      // NOMA group size N >= 1

  NetworkParams(double lambda_, double eta_, double beta_sic_, int n_users_);
  double delta() const { return 2.0 / eta; }
};

// Per-rank power shares and SIR thresholds (linear units).
struct Allocation {
  std::vector<double> powers;      // P_1..P_N, positive, sum to 1
  std::vector<double> thresholds;  // theta_1..theta_N, positive

  Allocation(std::vector<double> powers_, std::vector<double> thresholds_);
  int size() const { return static_cast<int>(powers.size()); }
};

// Effective power margins P~_j and the per-rank worst-case ratios
// M_i = max_{i<=j<=N} theta_j / P~_j (nonincreasing in i).
struct EffectiveAlloc {
  std::vector<double> tilde_p;
  std::vector<double> m_factors;
};

// P~_j = P_j - theta_j (sum_{m<j} P_m + beta sum_{k>j} P_k).  Throws
// InfeasibleAllocation if any margin is non-positive (the joint decoding
// event then has probability zero).
EffectiveAlloc effective_alloc(const NetworkParams& params, const Allocation& alloc);

// Unordered link distance in the whole-cell scheme: f_R(r) = 2 pi lam r e^{-pi lam r^2}.
double unordered_pdf_enoma(const NetworkParams& params, double r);
double unordered_cdf_enoma(const NetworkParams& params, double r);

// Nearest-neighbour BS distance rho: same Rayleigh law.
double nn_distance_pdf(const NetworkParams& params, double x);
double nn_distance_cdf(const NetworkParams& params, double x);
double nn_distance_quantile(const NetworkParams& params, double q);

// A pdf/cdf pair for an unordered link-distance law.
struct DistanceLaw {
  std::function<double(double)> pdf;
  std::function<double(double)> cdf;
};

DistanceLaw enoma_law(const NetworkParams& params);
DistanceLaw cnoma_law(double rho);  // f_{R|rho} = 8r/rho^2 on [0, rho/2]

// Ascending order statistic i of n i.i.d. draws from the base law.
double ordered_pdf(int i, int n, const DistanceLaw& base, double r);

// Equivalent alternating-sum expansions (components above / below rank i).
double ordered_pdf_weak_expansion(int i, int n, const DistanceLaw& base, double r);
double ordered_pdf_strong_expansion(int i, int n, const DistanceLaw& base, double r);

// In-disk ordered pdf, conditioned on rho; zero outside [0, rho/2].
double ordered_pdf_cnoma(int i, int n, double rho, double r);

}  // namespace nomamd::model
