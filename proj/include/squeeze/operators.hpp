#pragma once

#include <functional>
#include <string>
#include <utility>

#include "squeeze/gauge.hpp"

namespace squeeze {

/// Linear operator acting on gridded fields through central-difference
/// stencils (zero extension outside the grid; the domain must satisfy the
/// boundary-decay precondition for residuals to be meaningful).
struct DiscreteOperator {
  std::string name;
  int stencil_order = 4;
  std::function<Grid2D(const Grid2D&)> apply;

  Grid2D operator()(const Grid2D& f) const { return apply(f); }
};

// stencil building blocks (4th-order central differences)
Grid2D diff_x(const Grid2D& f);
Grid2D diff_y(const Grid2D& f);
Grid2D diff2_x(const Grid2D& f);
Grid2D diff2_y(const Grid2D& f);

/// Ladder pair (c, c daggered): c = (l/sqrt(2) omega_c) (v_x + i v_y) with
/// v = -i grad - (e/hbar c) A; satisfies [c, c+] = 1 on decayed fields.
std::pair<DiscreteOperator, DiscreteOperator> make_ladder(
    double l, const GaugeField& gauge);
inline std::pair<DiscreteOperator, DiscreteOperator> make_ladder(double l = 1.0) {
  return make_ladder(l, GaugeField::symmetric(l));
}

/// H = (1/2m) (-i hbar grad - (e/c) A)^2; eigenvalues (N + 1/2) omega_c.
DiscreteOperator make_hamiltonian(double l, const GaugeField& gauge);
inline DiscreteOperator make_hamiltonian(double l = 1.0) {
  return make_hamiltonian(l, GaugeField::symmetric(l));
}

/// Guiding-center components in the symmetric gauge (natural units):
/// X = x/2 - i l^2 d/dy,  Y = y/2 + i l^2 d/dx.
DiscreteOperator make_guiding_X(double l = 1.0);
DiscreteOperator make_guiding_Y(double l = 1.0);

/// X_Phi = (X - X0) cos(Phi) + (Y - Y0) sin(Phi), symmetric gauge.
DiscreteOperator make_X_phi(cplx phi, Vec2 center_offset = {0.0, 0.0}, double l = 1.0);
/// Same operator assembled in rotated coordinates,
/// (x cos Phi + y sin Phi)/2 - i l^2 d/dy~; agrees with make_X_phi to roundoff.
DiscreteOperator make_X_phi_rotated_form(cplx phi, Vec2 center_offset = {0.0, 0.0},
                                         double l = 1.0);

/// Translation generator P = -i grad - (e/hbar c) A + beta (B x r)/B,
/// valid in any supported gauge.
std::pair<DiscreteOperator, DiscreteOperator> make_P(double l, const GaugeField& gauge);
inline std::pair<DiscreteOperator, DiscreteOperator> make_P(double l = 1.0) {
  return make_P(l, GaugeField::symmetric(l));
}

/// <psi|O|psi> by quadrature; real to ~1e-10 for Hermitian O on converged grids.
cplx expectation(const Grid2D& field, const DiscreteOperator& op);

}  // namespace squeeze
