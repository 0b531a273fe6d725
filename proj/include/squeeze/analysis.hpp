#pragma once

#include <vector>

#include "squeeze/states.hpp"

namespace squeeze {

/// Periodic lattice patch of guiding centers; site (m, n) at (m a, n b).
struct LatticeSpec {
  double a = 1.0;
  double b = 1.0;
  int rows = 1;
  int cols = 1;

  LatticeSpec(double a_, double b_, int rows_, int cols_)
      : a(a_), b(b_), rows(rows_), cols(cols_) {
    if (a_ <= 0 || b_ <= 0 || rows_ < 1 || cols_ < 1)
      throw Error("LatticeSpec requires positive spacings and counts");
  }
  double cell_area() const { return a * b; }
};

/// Eigenvalue summary of the overlap Gram matrix of a state family.
struct GramReport {
  int size = 0;
  std::vector<double> eigenvalues;  ///< ascending
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  double condition = 0.0;
};

/// sqrt on the branch with non-negative real part.
cplx sqrt_positive_real(cplx z);

/// Closed-form overlap <R,Phi,N | R',Phi',N'> of normalized squeezed states
/// (delta_{NN'}, quartic-root prefactors, flux phase, Gaussian center factor).
cplx overlap_analytic(const StateSpec& s1, const StateSpec& s2);

/// Quadrature overlap on an explicit grid, or on an automatic union grid.
cplx overlap_numeric(const StateSpec& s1, const StateSpec& s2, const GridSpec& grid);
cplx overlap_numeric(const StateSpec& s1, const StateSpec& s2, double h = 1.0 / 16.0,
                     double tail = 1e-13);

/// Grid covering the supports of both states at spacing h.
GridSpec union_grid(const StateSpec& s1, const StateSpec& s2, double h,
                    double tail = 1e-13);

/// Hermitian Gram matrix G_jk = overlap_analytic(s_j, s_k), stored row-major.
std::vector<cplx> gram_matrix(const std::vector<StateSpec>& states);

/// Frame spectrum of the squeezed-state family on the lattice patch;
/// throws TooLarge beyond rows*cols = 400.
GramReport frame_spectrum(const LatticeSpec& lattice, const SqueezeAngle& phi, int n,
                          double l = 1.0);

/// Discretized closure sum  sum_{N<=n_max} int_disk d^2R/(2 pi l^2) |R,N><R,N|f>
/// over guiding centers on a square lattice of the given step inside the disk.
/// Throws DomainTooSmall when the overlap coefficients have not decayed at the
/// disk boundary.
Grid2D closure_apply(const Grid2D& f, int n_max, Vec2 domain_center,
                     double domain_radius, double step, const SqueezeAngle& phi,
                     double l = 1.0);

}  // namespace squeeze
