#include "squeeze/operators.hpp"

#include "squeeze/parallel.hpp"

namespace squeeze {

namespace {

inline cplx sample(const Grid2D& f, int i, int j) {
  if (i < 0 || j < 0 || i >= f.spec.nx || j >= f.spec.ny) return {};
  return f.values[static_cast<std::size_t>(j) * f.spec.nx + i];
}

template <typename Fn>
Grid2D map_rows(const Grid2D& f, Fn&& fn) {
  Grid2D out(f.spec);
  parallel_chunks(f.spec.ny, [&](int j0, int j1) {
    for (int j = j0; j < j1; ++j)
      for (int i = 0; i < f.spec.nx; ++i)
        out.values[static_cast<std::size_t>(j) * f.spec.nx + i] = fn(i, j);
  });
  return out;
}

}  // namespace

Grid2D diff_x(const Grid2D& f) {
  const double w = 1.0 / (12.0 * f.spec.dx);
  return map_rows(f, [&](int i, int j) {
    return w * (-sample(f, i + 2, j) + 8.0 * sample(f, i + 1, j) -
                8.0 * sample(f, i - 1, j) + sample(f, i - 2, j));
  });
}

Grid2D diff_y(const Grid2D& f) {
  const double w = 1.0 / (12.0 * f.spec.dy);
  return map_rows(f, [&](int i, int j) {
    return w * (-sample(f, i, j + 2) + 8.0 * sample(f, i, j + 1) -
                8.0 * sample(f, i, j - 1) + sample(f, i, j - 2));
  });
}

Grid2D diff2_x(const Grid2D& f) {
  const double w = 1.0 / (12.0 * f.spec.dx * f.spec.dx);
  return map_rows(f, [&](int i, int j) {
    return w * (-sample(f, i + 2, j) + 16.0 * sample(f, i + 1, j) - 30.0 * sample(f, i, j) +
                16.0 * sample(f, i - 1, j) - sample(f, i - 2, j));
  });
}

Grid2D diff2_y(const Grid2D& f) {
  const double w = 1.0 / (12.0 * f.spec.dy * f.spec.dy);
  return map_rows(f, [&](int i, int j) {
    return w * (-sample(f, i, j + 2) + 16.0 * sample(f, i, j + 1) - 30.0 * sample(f, i, j) +
                16.0 * sample(f, i, j - 1) - sample(f, i, j - 2));
  });
}

std::pair<DiscreteOperator, DiscreteOperator> make_ladder(double l,
                                                          const GaugeField& gauge) {
  // c = (l/sqrt2)(v_x + i v_y), c+ = (l/sqrt2)(v_x - i v_y) in natural units
  auto make = [l, gauge](double sign, const std::string& name) {
    return DiscreteOperator{
        name, 4, [l, gauge, sign](const Grid2D& f) {
          Grid2D fx = diff_x(f), fy = diff_y(f);
          const double w = l / std::sqrt(2.0);
          Grid2D out(f.spec);
          parallel_chunks(f.spec.ny, [&](int j0, int j1) {
            for (int j = j0; j < j1; ++j) {
              double y = f.spec.y(j);
              for (int i = 0; i < f.spec.nx; ++i) {
                Vec2 a = gauge.potential(f.spec.x(i), y);
                std::size_t k = static_cast<std::size_t>(j) * f.spec.nx + i;
                cplx vx = cplx(0, -1) * fx.values[k] - a.x * f.values[k];
                cplx vy = cplx(0, -1) * fy.values[k] - a.y * f.values[k];
                out.values[k] = w * (vx + cplx(0, sign) * vy);
              }
            }
          });
          return out;
        }};
  };
  return {make(+1.0, "c"), make(-1.0, "c_dagger")};
}

DiscreteOperator make_hamiltonian(double l, const GaugeField& gauge) {
  (void)l;
  return DiscreteOperator{
      "H", 4, [gauge](const Grid2D& f) {
        Grid2D fxx = diff2_x(f), fyy = diff2_y(f);
        Grid2D fx = diff_x(f), fy = diff_y(f);
        Grid2D out(f.spec);
        const bool custom = gauge.kind() == GaugeField::Kind::Custom;
        parallel_chunks(f.spec.ny, [&](int j0, int j1) {
          for (int j = j0; j < j1; ++j) {
            double y = f.spec.y(j);
            for (int i = 0; i < f.spec.nx; ++i) {
              double x = f.spec.x(i);
              Vec2 a = gauge.potential(x, y);
              std::size_t k = static_cast<std::size_t>(j) * f.spec.nx + i;
              cplx lap = fxx.values[k] + fyy.values[k];
              cplx adotg = a.x * fx.values[k] + a.y * fy.values[k];
              cplx diverg = custom ? cplx(0, 0.5 * gauge.divergence(x, y)) * f.values[k]
                                   : cplx{};
              out.values[k] = 0.5 * (-lap + 2.0 * cplx(0, 1) * adotg +
                                     (a.x * a.x + a.y * a.y) * f.values[k]) +
                              diverg;
            }
          }
        });
        return out;
      }};
}

DiscreteOperator make_guiding_X(double l) {
  return DiscreteOperator{"X", 4, [l](const Grid2D& f) {
                            Grid2D fy = diff_y(f);
                            Grid2D out(f.spec);
                            for (int j = 0; j < f.spec.ny; ++j)
                              for (int i = 0; i < f.spec.nx; ++i)
                                out.at(i, j) = 0.5 * f.spec.x(i) * f.at(i, j) -
                                               cplx(0, l * l) * fy.at(i, j);
                            return out;
                          }};
}

DiscreteOperator make_guiding_Y(double l) {
  return DiscreteOperator{"Y", 4, [l](const Grid2D& f) {
                            Grid2D fx = diff_x(f);
                            Grid2D out(f.spec);
                            for (int j = 0; j < f.spec.ny; ++j)
                              for (int i = 0; i < f.spec.nx; ++i)
                                out.at(i, j) = 0.5 * f.spec.y(j) * f.at(i, j) +
                                               cplx(0, l * l) * fx.at(i, j);
                            return out;
                          }};
}

DiscreteOperator make_X_phi(cplx phi, Vec2 center_offset, double l) {
  cplx c = std::cos(phi), s = std::sin(phi);
  cplx shift = center_offset.x * c + center_offset.y * s;
  DiscreteOperator X = make_guiding_X(l), Y = make_guiding_Y(l);
  return DiscreteOperator{"X_Phi", 4, [=](const Grid2D& f) {
                            Grid2D xf = X(f), yf = Y(f);
                            Grid2D out(f.spec);
                            for (std::size_t k = 0; k < out.values.size(); ++k)
                              out.values[k] =
                                  c * xf.values[k] + s * yf.values[k] - shift * f.values[k];
                            return out;
                          }};
}

DiscreteOperator make_X_phi_rotated_form(cplx phi, Vec2 center_offset, double l) {
  cplx c = std::cos(phi), s = std::sin(phi);
  cplx shift = center_offset.x * c + center_offset.y * s;
  return DiscreteOperator{
      "X_Phi(rotated)", 4, [=](const Grid2D& f) {
        // d/dy~ = -sin(Phi) d/dx + cos(Phi) d/dy
        Grid2D fx = diff_x(f), fy = diff_y(f);
        Grid2D out(f.spec);
        for (int j = 0; j < f.spec.ny; ++j)
          for (int i = 0; i < f.spec.nx; ++i) {
            cplx proj = 0.5 * (f.spec.x(i) * c + f.spec.y(j) * s);
            cplx dyt = -s * fx.at(i, j) + c * fy.at(i, j);
            out.at(i, j) = proj * f.at(i, j) - cplx(0, l * l) * dyt - shift * f.at(i, j);
          }
        return out;
      }};
}

std::pair<DiscreteOperator, DiscreteOperator> make_P(double l, const GaugeField& gauge) {
  double beta = 1.0 / (l * l);
  auto make = [beta, gauge](bool is_x) {
    return DiscreteOperator{
        is_x ? "Px" : "Py", 4, [beta, gauge, is_x](const Grid2D& f) {
          Grid2D d = is_x ? diff_x(f) : diff_y(f);
          Grid2D out(f.spec);
          for (int j = 0; j < f.spec.ny; ++j)
            for (int i = 0; i < f.spec.nx; ++i) {
              double x = f.spec.x(i), y = f.spec.y(j);
              Vec2 a = gauge.potential(x, y);
              double bxr = is_x ? -beta * y : beta * x;  // beta (z^ x r)
              double coeff = bxr - (is_x ? a.x : a.y);
              out.at(i, j) = cplx(0, -1) * d.at(i, j) + coeff * f.at(i, j);
            }
          return out;
        }};
  };
  return {make(true), make(false)};
}

cplx expectation(const Grid2D& field, const DiscreteOperator& op) {
  return grid_inner(field, op(field));
}

}  // namespace squeeze
