#pragma once

#include <functional>

#include "nomamd/model.hpp"
#include "nomamd/quadrature.hpp"
#include "nomamd/specfun.hpp"

namespace nomamd::analytic_cnoma {

// b-th CCP moment of rank i in the in-disk scheme, as a double quadrature
// over (rho, r).  The interference integral over the guard radius rho - r is
// closed through the same hypergeometric pattern as the whole-cell moments.
// (The one built-in model approximation: the BS rho away from the serving BS
// is treated as exactly rho from the UE.)
double moment_exact(const model::NetworkParams& params, const model::Allocation& alloc, int i,
                    double b, const quad::QuadratureConfig& qcfg = {});

// Single-quadrature approximation: guard radius shrunk to the link distance
// and the rho-away BS dropped from the interference field.  Tight at the mean
// for the weakest rank, overestimates the variance.
double moment_approx(const model::NetworkParams& params, const model::Allocation& alloc, int i,
                     double b, const quad::QuadratureConfig& qcfg = {});

// PGFL of the ordered relative-distance process of rank i conditioned on the
// in-disk radius rho/2, under the same pair of approximations.
double pgfl_given_rho(int i, const model::NetworkParams& params, double rho,
                      const std::function<double(double)>& f,
                      const quad::QuadratureConfig& qcfg = {});

}  // namespace nomamd::analytic_cnoma
