#pragma once

#include <functional>

#include "squeeze/core.hpp"

namespace squeeze {

/// Vector potential of the homogeneous field in natural units: potential()
/// returns (e/hbar c) A(r), whose curl equals beta = eB/(hbar c) = 1/l^2.
class GaugeField {
 public:
  enum class Kind { Symmetric, LandauDirection, Custom };

  /// A = (1/2) B x r.
  static GaugeField symmetric(double l = 1.0) {
    GaugeField g;
    g.kind_ = Kind::Symmetric;
    g.beta_ = 1.0 / (l * l);
    return g;
  }

  /// A = n ((B x r).n), translation-invariant along the unit vector n.
  static GaugeField landau_direction(Vec2 n, double l = 1.0) {
    GaugeField g;
    g.kind_ = Kind::LandauDirection;
    g.beta_ = 1.0 / (l * l);
    double len = std::hypot(n.x, n.y);
    if (len == 0.0) throw Error("landau_direction requires a nonzero direction");
    g.dir_ = {n.x / len, n.y / len};
    return g;
  }

  static GaugeField custom(std::function<Vec2(double, double)> a, double beta) {
    GaugeField g;
    g.kind_ = Kind::Custom;
    g.fn_ = std::move(a);
    g.beta_ = beta;
    return g;
  }

  Vec2 potential(double x, double y) const {
    switch (kind_) {
      case Kind::Symmetric:
        return {-0.5 * beta_ * y, 0.5 * beta_ * x};
      case Kind::LandauDirection: {
        double proj = beta_ * (-y * dir_.x + x * dir_.y);  // (B x r).n
        return {dir_.x * proj, dir_.y * proj};
      }
      case Kind::Custom:
        return fn_(x, y);
    }
    return {};
  }

  /// div A, needed by the Hamiltonian; identically zero except custom gauges.
  double divergence(double x, double y, double h = 1e-4) const {
    if (kind_ != Kind::Custom) return 0.0;
    Vec2 xp = fn_(x + h, y), xm = fn_(x - h, y);
    Vec2 yp = fn_(x, y + h), ym = fn_(x, y - h);
    return (xp.x - xm.x) / (2 * h) + (yp.y - ym.y) / (2 * h);
  }

  double curl(double x, double y, double h = 1e-4) const {
    if (kind_ != Kind::Custom) return beta_;
    Vec2 xp = fn_(x + h, y), xm = fn_(x - h, y);
    Vec2 yp = fn_(x, y + h), ym = fn_(x, y - h);
    return (xp.y - xm.y) / (2 * h) - (yp.x - ym.x) / (2 * h);
  }

  double beta() const { return beta_; }
  Kind kind() const { return kind_; }
  Vec2 direction() const { return dir_; }

 private:
  Kind kind_ = Kind::Symmetric;
  double beta_ = 1.0;
  Vec2 dir_{1.0, 0.0};
  std::function<Vec2(double, double)> fn_;
};

/// Largest |curl A - beta| over a coarse sampling of the grid box.
double max_curl_error(const GaugeField& g, const GridSpec& box, int samples = 9);

}  // namespace squeeze
