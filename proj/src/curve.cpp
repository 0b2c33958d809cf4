#include "peskin/curve.hpp"

#include <cmath>
#include <string>

#include "peskin/errors.hpp"
#include "peskin/kernels.hpp"

namespace peskin {

Curve::Curve(VectorGrid points) : points_(std::move(points)) {
  for (std::size_t k = 0; k < points_.size(); ++k) {
    const Vec2 p = points_[k];
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw DegeneracyError("non-finite coordinate at node " + std::to_string(k));
    }
  }
}

double star_norm(const Curve& c) { return kernels::min_chord_ratio(c.points()); }

double area(const Curve& c, const SpectralPlan& plan) {
  require_size(c.size(), plan.n(), "area");
  const VectorGrid t = plan.derivative(c.points());
  double sum = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) sum += c[k].x * t.y()[k] - c[k].y * t.x()[k];
  return 0.5 * sum * plan.h();
}

double energy(const Curve& c, const SpectralPlan& plan) {
  require_size(c.size(), plan.n(), "energy");
  const VectorGrid t = plan.derivative(c.points());
  double sum = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) sum += dot(t[k], t[k]);
  return 0.5 * sum * plan.h();
}

double holder_seminorm(std::span<const double> v, double gamma) { return kernels::max_holder_ratio(v, gamma); }

double holder_seminorm(const VectorGrid& v, double gamma) { return kernels::max_holder_ratio(v, gamma); }

double deformation_ratio(const Curve& c, const SpectralPlan& plan, double gamma) {
  const double sn = star_norm(c);
  if (!(sn > 0.0)) throw DegeneracyError("deformation_ratio: star norm vanishes");
  const VectorGrid t = plan.derivative(c.points());
  return (max_norm(t) + holder_seminorm(t, gamma)) / sn;
}

double deformation_ratio_0(const Curve& c, const SpectralPlan& plan) {
  const double sn = star_norm(c);
  if (!(sn > 0.0)) throw DegeneracyError("deformation_ratio_0: star norm vanishes");
  return max_norm(plan.derivative(c.points())) / sn;
}

double c1h_norm(const VectorGrid& v, const SpectralPlan& plan) {
  return max_norm(v) + max_norm(plan.derivative(v));
}

double c1h_norm(std::span<const double> v, const SpectralPlan& plan) {
  double sup = 0.0;
  double dsup = 0.0;
  const ScalarGrid d = plan.derivative(v);
  for (std::size_t k = 0; k < v.size(); ++k) {
    sup = std::max(sup, std::abs(v[k]));
    dsup = std::max(dsup, std::abs(d[k]));
  }
  return sup + dsup;
}

}  // namespace peskin
