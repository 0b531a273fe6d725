#include "squeeze/observables.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "squeeze/operators.hpp"
#include "squeeze/parallel.hpp"
#include "squeeze/symmetry.hpp"

namespace squeeze {

Grid2D density(const Grid2D& field) {
  Grid2D out(field.spec);
  for (std::size_t k = 0; k < out.values.size(); ++k)
    out.values[k] = std::norm(field.values[k]);
  return out;
}

CurrentField current(const Grid2D& field, const GaugeField& gauge) {
  Grid2D fx = diff_x(field), fy = diff_y(field);
  CurrentField j{Grid2D(field.spec), Grid2D(field.spec)};
  parallel_chunks(field.spec.ny, [&](int j0, int j1) {
    for (int row = j0; row < j1; ++row) {
      double y = field.spec.y(row);
      for (int i = 0; i < field.spec.nx; ++i) {
        Vec2 a = gauge.potential(field.spec.x(i), y);
        std::size_t k = static_cast<std::size_t>(row) * field.spec.nx + i;
        cplx psi = field.values[k];
        cplx px = cplx(0, -1) * fx.values[k] - a.x * psi;
        cplx py = cplx(0, -1) * fy.values[k] - a.y * psi;
        j.jx.values[k] = std::real(std::conj(psi) * px);
        j.jy.values[k] = std::real(std::conj(psi) * py);
      }
    }
  });
  return j;
}

MomentReport guiding_center_moments(const Grid2D& field, const SqueezeAngle& phi,
                                    double l, double boundary_tol) {
  if (boundary_peak_ratio(field) > boundary_tol)
    throw GridNotConverged(
        "guiding_center_moments: boundary samples exceed " + std::to_string(boundary_tol) +
        " of the peak; enlarge the domain");
  DiscreteOperator X = make_guiding_X(l), Y = make_guiding_Y(l);
  Grid2D xf = X(field), yf = Y(field);
  double c = std::cos(phi.phi1()), s = std::sin(phi.phi1());
  Grid2D xp(field.spec), yp(field.spec);
  for (std::size_t k = 0; k < xf.values.size(); ++k) {
    xp.values[k] = c * xf.values[k] + s * yf.values[k];
    yp.values[k] = -s * xf.values[k] + c * yf.values[k];
  }
  MomentReport r;
  r.mean_X = grid_inner(field, xp).real();
  r.mean_Y = grid_inner(field, yp).real();
  r.var_Xp = grid_inner(xp, xp).real() - r.mean_X * r.mean_X;
  r.var_Yp = grid_inner(yp, yp).real() - r.mean_Y * r.mean_Y;
  r.sym_cov = 2.0 * grid_inner(xp, yp).real() - 2.0 * r.mean_X * r.mean_Y;
  r.product = r.var_Xp * r.var_Yp;
  return r;
}

std::vector<double> hermite_roots(int n) {
  if (n <= 0) return {};
  // Golub-Welsch: roots are eigenvalues of the Jacobi matrix with
  // off-diagonals sqrt(k/2)
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) J(k - 1, k) = J(k, k - 1) = std::sqrt(k / 2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  std::vector<double> roots(es.eigenvalues().data(), es.eigenvalues().data() + n);
  for (double& r : roots) {
    for (int it = 0; it < 3; ++it) {
      double H = hermite(n, r).real();
      double Hp = 2.0 * n * hermite(n - 1, r).real();
      if (Hp != 0.0) r -= H / Hp;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Vec2> zeros(const StateSpec& spec) {
  std::vector<Vec2> out;
  if (spec.n == 0) return out;
  const double l = spec.units.l;
  cplx c = std::cos(spec.phi.value()), s = std::sin(spec.phi.value());
  // Re x~ = xi l, Im x~ = 0 as a 2x2 real system in (x-X, y-Y)
  double a11 = c.real(), a12 = s.real();
  double a21 = c.imag(), a22 = s.imag();
  double det = a11 * a22 - a12 * a21;
  if (std::abs(det) < 1e-14)
    throw DegenerateFrame("zeros: rotated-coordinate system is singular");
  for (double xi : hermite_roots(spec.n)) {
    double b1 = xi * l, b2 = 0.0;
    double ux = (b1 * a22 - b2 * a12) / det;
    double uy = (a11 * b2 - a21 * b1) / det;
    out.push_back({spec.cx + ux, spec.cy + uy});
  }
  return out;
}

CoherentReport coherent_limit_check(const StateSpec& spec, double h) {
  if (!(spec.phi.phi2() <= -8.0))
    throw Error("coherent_limit_check requires phi2 <= -8");
  CoherentReport rep;
  rep.lz_expected = -static_cast<double>(spec.n);
  const double l = spec.units.l;
  // density on circles around the center, radii spanning the orbit scale
  double base = l * std::sqrt(2.0 * spec.n + 1.0);
  for (double fac : {0.5, 1.0, 1.5}) {
    double rad = fac * base + 0.3 * l;
    double vmax = 0.0, vmin = std::numeric_limits<double>::max();
    const int nth = 720;
    for (int k = 0; k < nth; ++k) {
      double th = 2.0 * M_PI * k / nth;
      double v = std::norm(state_eval(
          spec, {spec.cx + rad * std::cos(th), spec.cy + rad * std::sin(th)}));
      vmax = std::max(vmax, v);
      vmin = std::min(vmin, v);
    }
    if (vmax > 0.0)
      rep.azimuthal_variation = std::max(rep.azimuthal_variation, (vmax - vmin) / vmax);
  }
  Grid2D f = field_on_grid(spec, suggest_grid(spec, h * l));
  DiscreteOperator Lz = rotation_generator(GaugeField::symmetric(l), {spec.cx, spec.cy}, l);
  rep.lz = expectation(f, Lz).real();
  return rep;
}

}  // namespace squeeze
