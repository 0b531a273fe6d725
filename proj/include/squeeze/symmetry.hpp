#pragma once

#include <string>
#include <variant>
#include <vector>

#include "squeeze/gauge.hpp"
#include "squeeze/operators.hpp"
#include "squeeze/states.hpp"

namespace squeeze {

/// Compensating gauge phase chi with grad chi = A_from - A_to.
struct GaugePhase {
  std::function<double(double, double)> chi;
  double operator()(double x, double y) const { return chi(x, y); }
};

/// chi(r) = (e/hbar c) int_0^r (A_from - A_to) . dr', straight segment from
/// the origin, adaptive quadrature; path-independent because the curls match.
/// Throws CurlMismatch when the gauges disagree on B beyond 1e-6.
GaugePhase gauge_phase(const GaugeField& from, const GaugeField& to);

/// Bare spatial shift (T_a psi)(r) = psi(r + a) by exact index resampling.
/// Throws OffGridShift unless a is an integer multiple of (dx, dy).
Grid2D resample_shift(const Grid2D& field, Vec2 a);

/// Magnetic translation T_A^(a): compensating phase from the line integral
/// of (A - A^(a)) over [r+a, r] times the bare shift. Commutes with the
/// Hamiltonian in any gauge.
Grid2D magnetic_translate(const Grid2D& field, Vec2 a, const GaugeField& gauge);

/// Generator of rotations about center (Eq. forms: canonical-plus-diamagnetic
/// for the origin, guiding-center form for a shifted axis).
DiscreteOperator rotation_generator(const GaugeField& gauge, Vec2 center = {0, 0},
                                    double l = 1.0);

/// (sigma_T psi)(x, y) = conj(psi(-x, y)); antiunitary mirror-times-time-reversal.
/// Requires the grid symmetric about the y-axis.
Grid2D sigma_T(const Grid2D& field);

/// Exact resample rotation by quarter_turns * 90 degrees about the origin;
/// requires a square grid centered on the origin.
Grid2D rotate_quarter(const Grid2D& field, int quarter_turns);

struct TranslationOp {
  Vec2 a;
};
struct RotationOp {
  double angle;  ///< finite angle; must be a multiple of pi/2
  Vec2 center{0.0, 0.0};
};
struct SigmaTOp {};

using SymmetryOp = std::variant<TranslationOp, RotationOp, SigmaTOp>;

struct SymmetryResidual {
  std::string state;
  std::string op;
  double residual;  ///< ||(H O - O H) psi|| / ||H psi||
};

/// Commutation residuals of the symmetry operator with the Hamiltonian on
/// each test state. Finite rotations: 90-degree multiples about the origin
/// only (UnsupportedAngle otherwise).
std::vector<SymmetryResidual> symmetry_commutation_report(
    const SymmetryOp& op, const GaugeField& gauge,
    const std::vector<StateSpec>& test_states, double h = 1.0 / 16.0);

}  // namespace squeeze
