#pragma once

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "squeeze/errors.hpp"

namespace squeeze {

using cplx = std::complex<double>;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

/// Natural units: hbar = m = 1 and eB/c = hbar/l^2 (eB > 0 by convention).
/// The magnetic length l is the single free scale; with l = 1 also
/// omega_c = 1 and eB/(hbar c) = 1.
struct Units {
  double l = 1.0;

  double omega_c() const { return 1.0 / (l * l); }
  /// eB/(hbar c), the flux density in natural units.
  double beta() const { return 1.0 / (l * l); }
};

/// Complex squeeze parameter Phi = phi1 + i*phi2 with phi2 < 0 strictly.
/// phi1 is canonicalized to (-pi, pi]. Construction is the sole validity
/// gate: downstream state constructors accept only SqueezeAngle.
class SqueezeAngle {
 public:
  SqueezeAngle(double phi1, double phi2) {
    if (!(phi2 < 0.0))
      throw NonNormalizable(
          "squeeze parameter requires Im(Phi) < 0 (Phi2 = " + std::to_string(phi2) +
          "): the X_Phi eigenvalue problem has normalizable solutions only for Im(Phi) < 0");
    phi1_ = std::remainder(phi1, 2.0 * M_PI);
    if (phi1_ <= -M_PI) phi1_ += 2.0 * M_PI;
    phi2_ = phi2;
  }
  explicit SqueezeAngle(cplx phi) : SqueezeAngle(phi.real(), phi.imag()) {}

  double phi1() const { return phi1_; }
  double phi2() const { return phi2_; }
  cplx value() const { return {phi1_, phi2_}; }

  /// Frame rotation by angle a: phi1 -> phi1 - a, phi2 unchanged.
  SqueezeAngle rotated(double a) const { return {phi1_ - a, phi2_}; }

  friend bool operator==(const SqueezeAngle& a, const SqueezeAngle& b) {
    return a.phi1_ == b.phi1_ && a.phi2_ == b.phi2_;
  }

 private:
  double phi1_;
  double phi2_;
};

inline SqueezeAngle validate_squeeze(cplx phi) { return SqueezeAngle(phi); }

/// Squeeze parameter r of the optics-style squeezing operator, tanh r = e^{2 phi2}.
inline double squeeze_strength(const SqueezeAngle& phi) {
  return std::atanh(std::exp(2.0 * phi.phi2()));
}

/// Full label of a stationary squeezed state |R,N>: Landau level n,
/// guiding-center expectation (cx, cy), squeeze parameter and units.
struct StateSpec {
  int n = 0;
  double cx = 0.0;
  double cy = 0.0;
  SqueezeAngle phi;
  Units units{};

  StateSpec(int n_, double cx_, double cy_, SqueezeAngle phi_, Units u = {})
      : n(n_), cx(cx_), cy(cy_), phi(phi_), units(u) {
    if (n_ < 0) throw WrongLevel("Landau level index must be non-negative");
  }

  double energy() const { return (n + 0.5) * units.omega_c(); }
  /// Eigenvalue of X_Phi: X cos(Phi) + Y sin(Phi).
  cplx eigenvalue() const {
    cplx p = phi.value();
    return cx * std::cos(p) + cy * std::sin(p);
  }
};

/// Physicists' Hermite polynomial H_n by the three-term forward recurrence,
/// stable for the complex arguments arising from rotated coordinates.
inline cplx hermite(int n, cplx xi) {
  cplx h0 = 1.0;
  if (n == 0) return h0;
  cplx h1 = 2.0 * xi;
  for (int k = 1; k < n; ++k) {
    cplx h2 = 2.0 * xi * h1 - 2.0 * static_cast<double>(k) * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

/// Complex-rotated relative coordinates:
///   x~ =  (x-X) cos(Phi) + (y-Y) sin(Phi)
///   y~ = -(x-X) sin(Phi) + (y-Y) cos(Phi)
/// Phi may be any complex number here (y~_Phi = x~_{Phi+pi/2}).
inline std::pair<cplx, cplx> rotated_coords(Vec2 r, Vec2 center, cplx phi) {
  cplx c = std::cos(phi), s = std::sin(phi);
  double ux = r.x - center.x, uy = r.y - center.y;
  return {ux * c + uy * s, -ux * s + uy * c};
}

/// Uniform rectangular grid; sample (i,j) sits at (x0 + i dx, y0 + j dy).
struct GridSpec {
  double x0 = 0.0;
  double y0 = 0.0;
  double dx = 1.0;
  double dy = 1.0;
  int nx = 0;
  int ny = 0;

  double x(int i) const { return x0 + i * dx; }
  double y(int j) const { return y0 + j * dy; }
  double x1() const { return x(nx - 1); }
  double y1() const { return y(ny - 1); }
  std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }

  friend bool operator==(const GridSpec& a, const GridSpec& b) {
    return a.x0 == b.x0 && a.y0 == b.y0 && a.dx == b.dx && a.dy == b.dy &&
           a.nx == b.nx && a.ny == b.ny;
  }
};

/// Complex samples on a GridSpec, row-major with y as the outer index.
/// Real-valued fields are stored with zero imaginary parts.
struct Grid2D {
  GridSpec spec;
  std::vector<cplx> values;

  Grid2D() = default;
  explicit Grid2D(const GridSpec& g) : spec(g), values(g.size(), cplx{}) {
    if (g.nx <= 0 || g.ny <= 0 || g.dx <= 0 || g.dy <= 0)
      throw Error("Grid2D requires positive spacings and sample counts");
  }

  cplx& at(int i, int j) { return values[static_cast<std::size_t>(j) * spec.nx + i]; }
  const cplx& at(int i, int j) const {
    return values[static_cast<std::size_t>(j) * spec.nx + i];
  }
  double x(int i) const { return spec.x(i); }
  double y(int j) const { return spec.y(j); }
};

// quadrature over grids (trapezoid weights degenerate to plain sums for
// fields that decay below roundoff at the boundary)

/// <f|g> = sum conj(f) g dx dy, pairwise-summed per row then across rows.
cplx grid_inner(const Grid2D& f, const Grid2D& g);
double grid_norm2(const Grid2D& f);
double grid_norm(const Grid2D& f);

double max_abs(const Grid2D& f);
/// max |f| over the outermost sample frame divided by max |f| overall.
double boundary_peak_ratio(const Grid2D& f);

Grid2D operator+(const Grid2D& a, const Grid2D& b);
Grid2D operator-(const Grid2D& a, const Grid2D& b);
Grid2D operator*(cplx scale, const Grid2D& a);

}  // namespace squeeze
