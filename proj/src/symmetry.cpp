#include "squeeze/symmetry.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "squeeze/parallel.hpp"

namespace squeeze {

namespace {

// adaptive Gauss-Legendre on [0,1]; exact in one panel for the linear
// integrands of the homogeneous-field gauges
double gl8(const std::function<double(double)>& f, double a, double b) {
  static const double xs[4] = {0.1834346424956498, 0.5255324099163290,
                               0.7966664774136267, 0.9602898564975363};
  static const double ws[4] = {0.3626837833783620, 0.3137066458778873,
                               0.2223810344533745, 0.1012285362903763};
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (int k = 0; k < 4; ++k)
    s += ws[k] * (f(mid - half * xs[k]) + f(mid + half * xs[k]));
  return s * half;
}

double adaptive_line(const std::function<double(double)>& f, double a, double b,
                     double tol, int depth = 0) {
  double whole = gl8(f, a, b);
  double mid = 0.5 * (a + b);
  double split = gl8(f, a, mid) + gl8(f, mid, b);
  if (std::abs(whole - split) <= tol || depth > 24) return split;
  return adaptive_line(f, a, mid, 0.5 * tol, depth + 1) +
         adaptive_line(f, mid, b, 0.5 * tol, depth + 1);
}

/// int over the straight segment p0 -> p1 of (A_from - A_to) . dr
double segment_integral(const GaugeField& from, const GaugeField& to, Vec2 p0, Vec2 p1,
                        double tol = 1e-12) {
  double ex = p1.x - p0.x, ey = p1.y - p0.y;
  auto f = [&](double t) {
    double x = p0.x + t * ex, y = p0.y + t * ey;
    Vec2 d0 = from.potential(x, y), d1 = to.potential(x, y);
    return (d0.x - d1.x) * ex + (d0.y - d1.y) * ey;
  };
  return adaptive_line(f, 0.0, 1.0, tol);
}

void require_equal_curl(const GaugeField& a, const GaugeField& b) {
  if (std::abs(a.beta() - b.beta()) > 1e-6)
    throw CurlMismatch("gauge fields disagree on B: " + std::to_string(a.beta()) +
                       " vs " + std::to_string(b.beta()));
  for (const GaugeField* g : {&a, &b}) {
    if (g->kind() != GaugeField::Kind::Custom) continue;
    for (double x : {-1.7, 0.4, 2.3})
      for (double y : {-2.1, 0.6, 1.9})
        if (std::abs(g->curl(x, y) - g->beta()) > 1e-6)
          throw CurlMismatch("custom gauge curl deviates from its declared B");
  }
}

}  // namespace

double max_curl_error(const GaugeField& g, const GridSpec& box, int samples) {
  double worst = 0.0;
  for (int i = 0; i < samples; ++i)
    for (int j = 0; j < samples; ++j) {
      double x = box.x0 + (box.x1() - box.x0) * i / (samples - 1.0);
      double y = box.y0 + (box.y1() - box.y0) * j / (samples - 1.0);
      worst = std::max(worst, std::abs(g.curl(x, y) - g.beta()));
    }
  return worst;
}

GaugePhase gauge_phase(const GaugeField& from, const GaugeField& to) {
  require_equal_curl(from, to);
  bool same = from.kind() == to.kind() && from.kind() != GaugeField::Kind::Custom &&
              (from.kind() != GaugeField::Kind::LandauDirection ||
               (from.direction().x == to.direction().x &&
                from.direction().y == to.direction().y));
  if (same) return GaugePhase{[](double, double) { return 0.0; }};
  return GaugePhase{[from, to](double x, double y) {
    return segment_integral(from, to, {0.0, 0.0}, {x, y});
  }};
}

Grid2D resample_shift(const Grid2D& field, Vec2 a) {
  const GridSpec& g = field.spec;
  double fi = a.x / g.dx, fj = a.y / g.dy;
  int ia = static_cast<int>(std::lround(fi));
  int ja = static_cast<int>(std::lround(fj));
  if (std::abs(fi - ia) > 1e-9 || std::abs(fj - ja) > 1e-9)
    throw OffGridShift("translation (" + std::to_string(a.x) + ", " + std::to_string(a.y) +
                       ") is not an integer number of grid steps");
  Grid2D out(g);
  for (int j = 0; j < g.ny; ++j) {
    int js = j + ja;
    if (js < 0 || js >= g.ny) continue;
    for (int i = 0; i < g.nx; ++i) {
      int is = i + ia;
      if (is < 0 || is >= g.nx) continue;
      out.at(i, j) = field.at(is, js);
    }
  }
  return out;
}

namespace {

using PhaseKey = std::tuple<int, double, double, double, double, double, double, double,
                            double, int, int>;

std::shared_ptr<const std::vector<double>> translation_phase_grid(const GridSpec& g,
                                                                  Vec2 a,
                                                                  const GaugeField& gauge) {
  GaugeField landau = GaugeField::landau_direction(a, 1.0 / std::sqrt(gauge.beta()));
  auto compute = [&] {
    auto phases = std::make_shared<std::vector<double>>(g.size());
    parallel_chunks(g.ny, [&](int j0, int j1) {
      for (int j = j0; j < j1; ++j)
        for (int i = 0; i < g.nx; ++i) {
          Vec2 r{g.x(i), g.y(j)};
          Vec2 ra{r.x + a.x, r.y + a.y};
          // printed orientation: integral runs from r+a to r
          (*phases)[static_cast<std::size_t>(j) * g.nx + i] =
              -segment_integral(gauge, landau, r, ra);
        }
    });
    return phases;
  };
  if (gauge.kind() == GaugeField::Kind::Custom) return compute();
  static std::mutex mu;
  static std::map<PhaseKey, std::shared_ptr<const std::vector<double>>> cache;
  PhaseKey key{static_cast<int>(gauge.kind()), gauge.beta(), gauge.direction().x,
               gauge.direction().y, a.x, a.y, g.x0, g.y0, g.dx, g.nx, g.ny};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto phases = compute();
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, phases);
  return phases;
}

}  // namespace

Grid2D magnetic_translate(const Grid2D& field, Vec2 a, const GaugeField& gauge) {
  if (a.x == 0.0 && a.y == 0.0) return field;
  Grid2D out = resample_shift(field, a);
  auto phases = translation_phase_grid(field.spec, a, gauge);
  for (std::size_t k = 0; k < out.values.size(); ++k)
    out.values[k] *= std::exp(cplx(0.0, (*phases)[k]));
  return out;
}

DiscreteOperator rotation_generator(const GaugeField& gauge, Vec2 center, double l) {
  const double beta = gauge.beta();
  if (center.x == 0.0 && center.y == 0.0) {
    return DiscreteOperator{
        "Lz", 4, [gauge, beta](const Grid2D& f) {
          Grid2D fx = diff_x(f), fy = diff_y(f);
          Grid2D out(f.spec);
          for (int j = 0; j < f.spec.ny; ++j)
            for (int i = 0; i < f.spec.nx; ++i) {
              double x = f.spec.x(i), y = f.spec.y(j);
              Vec2 av = gauge.potential(x, y);
              cplx px = cplx(0, -1) * fx.at(i, j) - av.x * f.at(i, j);
              cplx py = cplx(0, -1) * fy.at(i, j) - av.y * f.at(i, j);
              out.at(i, j) = x * py - y * px + 0.5 * beta * (x * x + y * y) * f.at(i, j);
            }
          return out;
        }};
  }
  // shifted axis: (beta/2)(R - R0)^2 - (1/beta) H via gauge-generic guiding center
  return DiscreteOperator{
      "Lz@R0", 4, [gauge, beta, center, l](const Grid2D& f) {
        auto guidingX = [&](const Grid2D& u) {
          Grid2D uy = diff_y(u);
          Grid2D out(u.spec);
          for (int j = 0; j < u.spec.ny; ++j)
            for (int i = 0; i < u.spec.nx; ++i) {
              Vec2 av = gauge.potential(u.spec.x(i), u.spec.y(j));
              cplx vy = cplx(0, -1) * uy.at(i, j) - av.y * u.at(i, j);
              out.at(i, j) = u.spec.x(i) * u.at(i, j) + l * l * vy - center.x * u.at(i, j);
            }
          return out;
        };
        auto guidingY = [&](const Grid2D& u) {
          Grid2D ux = diff_x(u);
          Grid2D out(u.spec);
          for (int j = 0; j < u.spec.ny; ++j)
            for (int i = 0; i < u.spec.nx; ++i) {
              Vec2 av = gauge.potential(u.spec.x(i), u.spec.y(j));
              cplx vx = cplx(0, -1) * ux.at(i, j) - av.x * u.at(i, j);
              out.at(i, j) = u.spec.y(j) * u.at(i, j) - l * l * vx - center.y * u.at(i, j);
            }
          return out;
        };
        Grid2D r2 = guidingX(guidingX(f)) + guidingY(guidingY(f));
        Grid2D hf = make_hamiltonian(l, gauge)(f);
        return cplx(0.5 * beta) * r2 - cplx(1.0 / beta) * hf;
      }};
}

Grid2D sigma_T(const Grid2D& field) {
  const GridSpec& g = field.spec;
  if (std::abs(g.x0 + g.x1()) > 1e-9 * std::max(std::abs(g.x0), g.dx))
    throw GridNotSymmetric("sigma_T requires a grid symmetric about the y-axis");
  Grid2D out(g);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) out.at(i, j) = std::conj(field.at(g.nx - 1 - i, j));
  return out;
}

Grid2D rotate_quarter(const Grid2D& field, int quarter_turns) {
  const GridSpec& g = field.spec;
  if (g.nx != g.ny || std::abs(g.dx - g.dy) > 0 ||
      std::abs(g.x0 + g.x1()) > 1e-9 * std::max(std::abs(g.x0), g.dx) ||
      std::abs(g.y0 + g.y1()) > 1e-9 * std::max(std::abs(g.y0), g.dy) ||
      std::abs(g.x0 - g.y0) > 1e-12)
    throw GridNotSymmetric("rotate_quarter requires a square grid centered on the origin");
  int k = ((quarter_turns % 4) + 4) % 4;
  if (k == 0) return field;
  Grid2D out(g);
  const int n = g.nx;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      // (R psi)(x_i, y_j) = psi(R^{-1} r): one CCW quarter turn reads (y, -x)
      int is = j, js = n - 1 - i;
      out.at(i, j) = field.at(is, js);
    }
  if (k > 1) return rotate_quarter(out, k - 1);
  return out;
}

std::vector<SymmetryResidual> symmetry_commutation_report(
    const SymmetryOp& op, const GaugeField& gauge,
    const std::vector<StateSpec>& test_states, double h) {
  std::vector<SymmetryResidual> rows;
  for (const StateSpec& spec : test_states) {
    double l = spec.units.l;
    DiscreteOperator H = make_hamiltonian(l, gauge);
    std::string opname;
    std::function<Grid2D(const Grid2D&)> apply;
    double margin = 0.0;
    bool centered_square = false;
    if (const auto* t = std::get_if<TranslationOp>(&op)) {
      Vec2 a = t->a;
      margin = std::max(std::abs(a.x), std::abs(a.y)) + 0.5;
      opname = "translation";
      apply = [a, gauge](const Grid2D& f) { return magnetic_translate(f, a, gauge); };
    } else if (const auto* r = std::get_if<RotationOp>(&op)) {
      if (r->center.x != 0.0 || r->center.y != 0.0)
        throw UnsupportedAngle("finite rotations are supported about the origin only");
      double turns = r->angle / M_PI_2;
      int k = static_cast<int>(std::lround(turns));
      if (std::abs(turns - k) > 1e-12)
        throw UnsupportedAngle("finite rotations restricted to multiples of 90 degrees");
      centered_square = true;
      opname = "rotation";
      GaugePhase chi = gauge_phase(gauge, GaugeField::symmetric(l));
      apply = [k, chi](const Grid2D& f) {
        Grid2D u(f.spec);
        for (int j = 0; j < f.spec.ny; ++j)
          for (int i = 0; i < f.spec.nx; ++i)
            u.at(i, j) = std::exp(cplx(0, -chi(f.spec.x(i), f.spec.y(j)))) * f.at(i, j);
        Grid2D v = rotate_quarter(u, k);
        for (int j = 0; j < f.spec.ny; ++j)
          for (int i = 0; i < f.spec.nx; ++i)
            v.at(i, j) *= std::exp(cplx(0, chi(f.spec.x(i), f.spec.y(j))));
        return v;
      };
    } else {
      centered_square = true;
      opname = "sigma_T";
      GaugePhase chi = gauge_phase(gauge, GaugeField::symmetric(l));
      apply = [chi](const Grid2D& f) {
        Grid2D u(f.spec);
        for (int j = 0; j < f.spec.ny; ++j)
          for (int i = 0; i < f.spec.nx; ++i)
            u.at(i, j) = std::exp(cplx(0, -chi(f.spec.x(i), f.spec.y(j)))) * f.at(i, j);
        Grid2D v = sigma_T(u);
        for (int j = 0; j < f.spec.ny; ++j)
          for (int i = 0; i < f.spec.nx; ++i)
            v.at(i, j) *= std::exp(cplx(0, chi(f.spec.x(i), f.spec.y(j))));
        return v;
      };
    }
    GridSpec g = suggest_grid(spec, h * l, 1e-13, margin);
    if (centered_square) {
      // force a square origin-centered grid for index-exact resampling
      double step = h * l;
      int m = std::max(g.nx / 2 + static_cast<int>(std::ceil(std::abs(spec.cx) / step)),
                       g.ny / 2 + static_cast<int>(std::ceil(std::abs(spec.cy) / step)));
      g.nx = g.ny = 2 * m + 1;
      g.dx = g.dy = step;
      g.x0 = g.y0 = -m * step;
    }
    Grid2D f = field_on_grid(spec, g);
    Grid2D Hf = H(f);
    Grid2D lhs = H(apply(f));
    Grid2D rhs = apply(Hf);
    double res = grid_norm(lhs - rhs) / grid_norm(Hf);
    rows.push_back({"N=" + std::to_string(spec.n), opname, res});
  }
  return rows;
}

}  // namespace squeeze
