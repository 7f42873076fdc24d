#include "nomamd/metadist.hpp"

#include <cmath>

#include "nomamd/errors.hpp"

namespace nomamd::metadist {

MetaDistribution build_md(double m1, double m2) {
  if (!(m1 >= 0.0 && m1 <= 1.0)) throw DomainError("build_md: m1 must lie in [0,1]");
  if (m2 > m1 + 1e-12) throw DomainError("build_md: invalid moments, m2 > m1");
  if (m2 < m1 * m1 - 1e-12) throw DomainError("build_md: invalid moments, m2 < m1^2");

  const double var = m2 - m1 * m1;
  if (m1 >= 1.0 - 1e-12) return DegenerateMD{1.0};
  if (m1 <= 1e-12) return DegenerateMD{0.0};
  if (var < 1e-14) return DegenerateMD{m1};

  const double beta_i = (m1 - m2) * (1.0 - m1) / var;
  const double a = beta_i * m1 / (1.0 - m1);
  return BetaMD{m1, m2, a, beta_i};
}

double md_ccdf(const MetaDistribution& md, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("md_ccdf: alpha must lie in [0,1]");
  if (const auto* d = std::get_if<DegenerateMD>(&md)) {
    return d->point > alpha ? 1.0 : 0.0;
  }
  const auto& b = std::get<BetaMD>(md);
  return 1.0 - specfun::reg_inc_beta(alpha, b.shape_a, b.shape_b);
}

double md_quantile(const MetaDistribution& md, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("md_quantile: p must lie in [0,1]");
  double lo = 0.0, hi = 1.0;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (md_ccdf(md, mid) >= p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double variance(double m1, double m2) {
  const double v = m2 - m1 * m1;
  if (v < -1e-12) throw DomainError("variance: invalid moments, m2 < m1^2");
  return v < 0.0 ? 0.0 : v;
}

double scp(double m1) { return m1; }

}  // namespace nomamd::metadist
