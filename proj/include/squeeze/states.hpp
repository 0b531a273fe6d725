#pragma once

#include "squeeze/core.hpp"

namespace squeeze {

/// |C_Phi|, the (real positive) normalization of the ground-level state:
/// |C_Phi|^2 = (1/2 pi l^2) sqrt(1 - e^{4 phi2}).
double normalization_constant(const SqueezeAngle& phi, double l);

/// Wave function amplitude of |R,N> at r, symmetric gauge:
///   C_Phi (i e^{-i Phi})^N / sqrt(2^N N!)
///     * exp( i (X y - Y x)/(2 l^2) - x~ (x~ + i y~)/(2 l^2) ) H_N(x~/l)
cplx state_eval(const StateSpec& spec, Vec2 r);

/// Closed-form wave function bound to a StateSpec.
struct WaveFunction {
  StateSpec spec;
  cplx operator()(double x, double y) const { return state_eval(spec, {x, y}); }
  cplx operator()(Vec2 r) const { return state_eval(spec, r); }
};

/// Ground-level (N = 0) wave function; throws WrongLevel for n != 0.
WaveFunction ground_state(const StateSpec& spec);

/// Grid geometry whose box contains the state down to |psi| ~ tail * peak,
/// aligned so the state center is a sample point and spacing is exactly h.
GridSpec suggest_grid(const StateSpec& spec, double h, double tail = 1e-13,
                      double margin = 0.0);

/// Samples state_eval over the grid (parallel over rows, deterministic).
Grid2D field_on_grid(const StateSpec& spec, const GridSpec& grid);

}  // namespace squeeze
