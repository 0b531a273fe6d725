#include "squeeze/core.hpp"

#include <algorithm>

#include "squeeze/parallel.hpp"

namespace squeeze {

namespace {

template <typename RowFn>
cplx reduce_rows(const Grid2D& f, RowFn&& row_sum) {
  const int ny = f.spec.ny;
  std::vector<cplx> rows(ny);
  parallel_chunks(ny, [&](int j0, int j1) {
    for (int j = j0; j < j1; ++j) rows[j] = row_sum(j);
  });
  return pairwise_sum(rows);
}

}  // namespace

cplx grid_inner(const Grid2D& f, const Grid2D& g) {
  if (!(f.spec == g.spec)) throw Error("grid_inner: mismatched grids");
  const int nx = f.spec.nx;
  cplx s = reduce_rows(f, [&](int j) {
    std::vector<cplx> row(nx);
    const cplx* a = &f.values[static_cast<std::size_t>(j) * nx];
    const cplx* b = &g.values[static_cast<std::size_t>(j) * nx];
    for (int i = 0; i < nx; ++i) row[i] = std::conj(a[i]) * b[i];
    return pairwise_sum(row);
  });
  return s * (f.spec.dx * f.spec.dy);
}

double grid_norm2(const Grid2D& f) {
  const int nx = f.spec.nx;
  cplx s = reduce_rows(f, [&](int j) {
    std::vector<cplx> row(nx);
    const cplx* a = &f.values[static_cast<std::size_t>(j) * nx];
    for (int i = 0; i < nx; ++i) row[i] = std::norm(a[i]);
    return pairwise_sum(row);
  });
  return s.real() * (f.spec.dx * f.spec.dy);
}

double grid_norm(const Grid2D& f) { return std::sqrt(grid_norm2(f)); }

double max_abs(const Grid2D& f) {
  double m = 0.0;
  for (const cplx& v : f.values) m = std::max(m, std::abs(v));
  return m;
}

double boundary_peak_ratio(const Grid2D& f) {
  const int nx = f.spec.nx, ny = f.spec.ny;
  double peak = max_abs(f);
  if (peak == 0.0) return 0.0;
  double edge = 0.0;
  for (int i = 0; i < nx; ++i) {
    edge = std::max(edge, std::abs(f.at(i, 0)));
    edge = std::max(edge, std::abs(f.at(i, ny - 1)));
  }
  for (int j = 0; j < ny; ++j) {
    edge = std::max(edge, std::abs(f.at(0, j)));
    edge = std::max(edge, std::abs(f.at(nx - 1, j)));
  }
  return edge / peak;
}

Grid2D operator+(const Grid2D& a, const Grid2D& b) {
  if (!(a.spec == b.spec)) throw Error("grid +: mismatched grids");
  Grid2D out(a.spec);
  for (std::size_t k = 0; k < out.values.size(); ++k)
    out.values[k] = a.values[k] + b.values[k];
  return out;
}

Grid2D operator-(const Grid2D& a, const Grid2D& b) {
  if (!(a.spec == b.spec)) throw Error("grid -: mismatched grids");
  Grid2D out(a.spec);
  for (std::size_t k = 0; k < out.values.size(); ++k)
    out.values[k] = a.values[k] - b.values[k];
  return out;
}

Grid2D operator*(cplx scale, const Grid2D& a) {
  Grid2D out(a.spec);
  for (std::size_t k = 0; k < out.values.size(); ++k) out.values[k] = scale * a.values[k];
  return out;
}

}  // namespace squeeze
