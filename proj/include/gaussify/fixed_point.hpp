#pragma once

// Gaussian fixed points of the iteration map.
//
// A fixed point is Q(Gamma)|0,0> with Q(Gamma) = exp[(a^dag)^T Gamma (a^dag) / 2]
// for a complex symmetric 2x2 matrix Gamma. It is normalizable iff the
// spectral norm of Gamma is below one.

#include <array>

#include <Eigen/Dense>

#include "gaussify/fock.hpp"

namespace gaussify::fixed_point {

struct GammaMatrix {
  Complex g1 = 0.0;   // (1,1)
  Complex g2 = 0.0;   // (2,2)
  Complex g12 = 0.0;  // off-diagonal, stored once

  static GammaMatrix from_matrix(const Eigen::Matrix2cd& m);
  Eigen::Matrix2cd matrix() const;
  GammaMatrix scaled(Complex factor) const { return {g1 * factor, g2 * factor, g12 * factor}; }
};

// U^T Gamma U = diag(singular_values), U unitary, values sorted descending.
struct TakagiFactorization {
  Eigen::Matrix2cd U;
  std::array<double, 2> singular_values;
};

// Symmetric squeezing matrix with singular values arctanh of Gamma's.
struct SqueezingParams {
  Eigen::Matrix2cd Z;
  std::array<double, 2> singular_values;
};

// Gamma determined by the low-order coefficients of an arbitrary input:
// with beta = alpha / alpha(0,0),
//   g1 = sqrt2 beta20 - beta10^2, g2 = sqrt2 beta02 - beta01^2,
//   g12 = beta11 - beta10 beta01.
// Throws DomainError ("no Gaussian limit") when alpha(0,0) == 0.
GammaMatrix gamma_from_state(const PureState2& alpha);

double spectral_norm(const GammaMatrix& gamma);
bool is_normalizable(const GammaMatrix& gamma);
TakagiFactorization takagi(const GammaMatrix& gamma);
// Throws NotNormalizable when the spectral norm is >= 1.
SqueezingParams squeezing_params(const GammaMatrix& gamma);

// <m,n|Q(Gamma)|0,0> for m, n <= cutoff, alpha(0,0) = 1. Throws
// NotNormalizable when the spectral norm is >= 1.
PureState2 limit_coefficients(const GammaMatrix& gamma, int cutoff);
// Same coefficients without the normalizability check.
PureState2 formal_limit_coefficients(const GammaMatrix& gamma, int cutoff);

// <psi(Gamma)|psi(Gamma)> = prod_i (1 - delta_i^2)^{-1/2} over Takagi values.
double limit_norm_sq(const GammaMatrix& gamma);

// Limit coefficients at the smallest cutoff in [min_cutoff, max_cutoff]
// (doubling) whose relative tail weight is below tail_tol. tail_mass reports
// the weight still missing at the chosen cutoff.
Truncated<PureState2> limit_state(const GammaMatrix& gamma, double tail_tol, int min_cutoff = 8,
                                  int max_cutoff = 256);

}  // namespace gaussify::fixed_point
