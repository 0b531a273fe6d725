#pragma once

#include <vector>

#include "squeeze/gauge.hpp"
#include "squeeze/states.hpp"

namespace squeeze {

/// Guiding-center statistics in the principal axes (frame rotated by phi1).
struct MomentReport {
  double mean_X = 0.0;   ///< <X'>
  double mean_Y = 0.0;   ///< <Y'>
  double var_Xp = 0.0;   ///< (Delta X')^2
  double var_Yp = 0.0;   ///< (Delta Y')^2
  double sym_cov = 0.0;  ///< <dX' dY' + dY' dX'>
  double product = 0.0;  ///< var_Xp * var_Yp
};

struct CurrentField {
  Grid2D jx;
  Grid2D jy;
};

struct CoherentReport {
  double azimuthal_variation = 0.0;  ///< max relative density variation on circles
  double lz = 0.0;                   ///< <L_z> about the state center
  double lz_expected = 0.0;          ///< -hbar N
};

/// Pointwise |psi|^2 (real field, zero imaginary parts).
Grid2D density(const Grid2D& field);

/// Gauge-covariant probability current j = Re[psi* (-i grad - (e/hbar c)A) psi],
/// natural units m = 1, via 4th-order stencils.
CurrentField current(const Grid2D& field, const GaugeField& gauge);

/// Moments by discrete guiding-center operators + quadrature (symmetric gauge).
/// Throws GridNotConverged when boundary contamination is detected.
MomentReport guiding_center_moments(const Grid2D& field, const SqueezeAngle& phi,
                                    double l = 1.0,
                                    double boundary_tol = 1e-9);

/// The N isolated zeros of |R,N>: x~_Phi/l at the real roots of H_N with
/// Im x~_Phi = 0; algebraic (Hermite roots + 2x2 linear solve).
std::vector<Vec2> zeros(const StateSpec& spec);

/// Real roots of H_n (Golub-Welsch + Newton polish), ascending.
std::vector<double> hermite_roots(int n);

/// Rotational-invariance and angular-momentum diagnostics of the coherent
/// limit; requires phi2 <= -8.
CoherentReport coherent_limit_check(const StateSpec& spec, double h = 1.0 / 16.0);

}  // namespace squeeze
