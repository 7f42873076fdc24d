#pragma once

#include <functional>

#include "nomamd/model.hpp"
#include "nomamd/quadrature.hpp"
#include "nomamd/specfun.hpp"

namespace nomamd::analytic_enoma {

// M~_{j,b} = C(N-1,j-1) N / (N - j + 2F1(b,-delta;1-delta;-M_i)), 1 <= j <= i.
double mtilde(int j, int i, const model::NetworkParams& params, double m_factor, double b,
              const specfun::Tolerance& tol = {});

// b-th CCP moment of rank i in the whole-cell scheme (closed form, alternating
// sum accumulated with compensated summation).
double moment(const model::NetworkParams& params, const model::Allocation& alloc, int i,
              double b, const specfun::Tolerance& tol = {});

// PGFL of the ordered relative-distance process of rank i: E prod f(R_i/|y|).
// f must map (0,1] into [0,1] and approach 1 fast enough at 0+ for the inner
// integral (after y -> 1/u) to converge.
double pgfl(int i, const model::NetworkParams& params, const std::function<double(double)>& f,
            const quad::QuadratureConfig& qcfg = {});

}  // namespace nomamd::analytic_enoma
