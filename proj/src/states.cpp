#include "squeeze/states.hpp"

#include <cmath>

#include "squeeze/parallel.hpp"

namespace squeeze {

double normalization_constant(const SqueezeAngle& phi, double l) {
  // 1 - e^{4 phi2} via expm1 so the coherent limit phi2 -> -inf stays exact
  double one_minus = -std::expm1(4.0 * phi.phi2());
  return std::sqrt(std::sqrt(one_minus) / (2.0 * M_PI * l * l));
}

namespace {

struct EvalPlan {
  cplx cosPhi, sinPhi;
  double X, Y, inv2l2, l;
  int n;
  cplx log_pref;  // log of C_Phi (i e^{-i Phi})^N / sqrt(2^N N!)
};

EvalPlan make_plan(const StateSpec& spec) {
  EvalPlan p;
  cplx phi = spec.phi.value();
  p.cosPhi = std::cos(phi);
  p.sinPhi = std::sin(phi);
  p.X = spec.cx;
  p.Y = spec.cy;
  p.l = spec.units.l;
  p.inv2l2 = 1.0 / (2.0 * p.l * p.l);
  p.n = spec.n;
  double lnC = std::log(normalization_constant(spec.phi, p.l));
  // log(i e^{-i Phi}) = phi2 + i (pi/2 - phi1); factorials in log space
  cplx lg = cplx(spec.phi.phi2(), M_PI_2 - spec.phi.phi1());
  double lfac = 0.5 * (p.n * std::log(2.0) + std::lgamma(p.n + 1.0));
  p.log_pref = lnC + static_cast<double>(p.n) * lg - lfac;
  return p;
}

inline cplx eval(const EvalPlan& p, double x, double y) {
  double ux = x - p.X, uy = y - p.Y;
  cplx xt = ux * p.cosPhi + uy * p.sinPhi;
  cplx yt = -ux * p.sinPhi + uy * p.cosPhi;
  cplx expo = cplx(0.0, (p.X * y - p.Y * x) * p.inv2l2) - xt * (xt + cplx(0, 1) * yt) * p.inv2l2;
  return std::exp(p.log_pref + expo) * hermite(p.n, xt / p.l);
}

}  // namespace

cplx state_eval(const StateSpec& spec, Vec2 r) {
  return eval(make_plan(spec), r.x, r.y);
}

WaveFunction ground_state(const StateSpec& spec) {
  if (spec.n != 0)
    throw WrongLevel("ground_state requires n = 0, got n = " + std::to_string(spec.n));
  return WaveFunction{spec};
}

GridSpec suggest_grid(const StateSpec& spec, double h, double tail, double margin) {
  const double l = spec.units.l;
  const double p2 = spec.phi.phi2();
  // |psi|^2 ~ exp(-a_u u^2 - a_v v^2) in principal axes (u along Phi1)
  double e = std::exp(p2);
  double a_u = e * std::cosh(p2) / (l * l);
  double a_v = e * std::abs(std::sinh(p2)) / (l * l);
  double T = -2.0 * std::log(tail);
  double herm = l * std::sqrt(2.0 * spec.n + 1.0) / std::cosh(p2) + 2.0 * l;
  double eu = std::sqrt(T / a_u) + herm + margin;
  double ev = std::sqrt(T / a_v) + herm + margin;
  double c1 = std::abs(std::cos(spec.phi.phi1()));
  double s1 = std::abs(std::sin(spec.phi.phi1()));
  double ex = eu * c1 + ev * s1;
  double ey = eu * s1 + ev * c1;
  GridSpec g;
  g.dx = g.dy = h;
  int mx = static_cast<int>(std::ceil(ex / h));
  int my = static_cast<int>(std::ceil(ey / h));
  g.nx = 2 * mx + 1;
  g.ny = 2 * my + 1;
  g.x0 = spec.cx - mx * h;
  g.y0 = spec.cy - my * h;
  return g;
}

Grid2D field_on_grid(const StateSpec& spec, const GridSpec& grid) {
  Grid2D out(grid);
  EvalPlan p = make_plan(spec);
  parallel_chunks(grid.ny, [&](int j0, int j1) {
    for (int j = j0; j < j1; ++j) {
      double y = grid.y(j);
      cplx* row = &out.values[static_cast<std::size_t>(j) * grid.nx];
      for (int i = 0; i < grid.nx; ++i) row[i] = eval(p, grid.x(i), y);
    }
  });
  return out;
}

}  // namespace squeeze
