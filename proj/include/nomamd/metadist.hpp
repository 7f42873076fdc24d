#pragma once

#include <variant>

#include "nomamd/specfun.hpp"

namespace nomamd::metadist {

// Beta-matched meta distribution of the conditional coverage probability.
struct BetaMD {
  double m1;       // first moment, in (0,1)
  double m2;       // second moment, m1^2 < m2 <= m1
  double shape_a;  // beta_i m1 / (1 - m1)
  double shape_b;  // beta_i = (m1 - m2)(1 - m1) / (m2 - m1^2)
};

// Point mass, used for zero-variance moment pairs and infeasible allocations.
struct DegenerateMD {
  double point;  // in [0,1]
};

using MetaDistribution = std::variant<BetaMD, DegenerateMD>;

// Match a beta distribution to (m1, m2); degenerates to a point mass when the
// variance vanishes (the shape parameters blow up below ~1e-14).
MetaDistribution build_md(double m1, double m2);

// P(CCP > alpha): 1 at alpha = 0, 0 at alpha = 1, nonincreasing between.
double md_ccdf(const MetaDistribution& md, double alpha);

// Inverse ccdf by bisection (largest alpha with ccdf >= p).
double md_quantile(const MetaDistribution& md, double p);

// sigma^2 = m2 - m1^2.
double variance(double m1, double m2);

// The spatially averaged coverage probability is just the first moment; kept
// as a named operation for the rate computations.
double scp(double m1);

}  // namespace nomamd::metadist
