#pragma once

namespace nomamd::specfun {

// Accuracy knobs shared by the series/continued-fraction evaluations.
struct Tolerance {
  double rel_err = 1e-10;
  int max_terms = 10000;
};

// Gauss hypergeometric in the coverage pattern:
//
//   hyp2f1_cov(b, delta, x) = 2F1(b, -delta; 1-delta; -x)
//                           = 1 + 2 * int_1^inf (1 - (1 + x y^{-eta})^{-b}) y dy,
//
// with eta = 2/delta.  Requires b > 0, delta in (0,1), x >= 0; the result is
// >= 1 and nondecreasing in both x and b.
double hyp2f1_cov(double b, double delta, double x, const Tolerance& tol = {});

// Upper incomplete gamma Gamma(j, x) for integer j >= 1, via the exact
// finite sum Gamma(j,x) = (j-1)! e^{-x} sum_{k<j} x^k/k!.
double upper_inc_gamma(int j, double x);

// gamma(j, x) / x^j where gamma is the lower incomplete gamma.  Stable down
// to x = 0 (limit 1/j); this is the ratio the in-disk PGFL needs.
double lower_inc_gamma_ratio(int j, double x, const Tolerance& tol = {});

// Regularized incomplete beta I_alpha(a, b), alpha in [0,1], a, b > 0.
double reg_inc_beta(double alpha, double a, double b, const Tolerance& tol = {});

// ln C(n, k).  Exact integer arithmetic for n <= 20, log-gamma beyond.
double log_binomial(int n, int k);

// C(n, k) as a double (exact for n <= 20).
double binomial(int n, int k);

}  // namespace nomamd::specfun
