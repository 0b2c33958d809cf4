#include "peskin/biop.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "peskin/errors.hpp"
#include "peskin/kernels.hpp"

namespace peskin {

BlockKernel kernel_matrix(const Curve& c, const SpectralPlan& plan) {
  require_size(c.size(), plan.n(), "kernel_matrix");
  return kernels::kernel_matrix(c.points(), plan.derivative(c.points()));
}

VectorGrid remainder(const Curve& c, const SpectralPlan& plan) {
  require_size(c.size(), plan.n(), "remainder");
  return kernels::remainder(c.points(), plan.derivative(c.points()), plan);
}

VectorGrid rhs(const Curve& c, const SpectralPlan& plan) { return plan.lambda(c.points()) + remainder(c, plan); }

VectorGrid linearize_rhs(const Curve& base, const VectorGrid& direction, double eps, const SpectralPlan& plan) {
  require_size(direction.size(), base.size(), "linearize_rhs direction");
  if (!(eps > 0.0)) throw ArgumentError("linearize_rhs: eps must be positive");
  const Curve plus(VectorGrid(base.points()).axpy(eps, direction));
  const Curve minus(VectorGrid(base.points()).axpy(-eps, direction));
  VectorGrid out = rhs(plus, plan) - rhs(minus, plan);
  return out *= 1.0 / (2.0 * eps);
}

double default_linearization_eps(const Curve& base, const SpectralPlan& plan) {
  return 1e-5 * c1h_norm(base.points(), plan);
}

Mat2 stokeslet(Vec2 x) {
  const double r2 = dot(x, x);
  if (!(r2 > 0.0)) throw DegeneracyError("stokeslet: singular at the origin");
  const double lg = -0.5 * std::log(r2);
  const double s = 1.0 / (4.0 * std::numbers::pi);
  return {s * (lg + x.x * x.x / r2), s * (x.x * x.y / r2), s * (x.y * x.x / r2), s * (lg + x.y * x.y / r2)};
}

FieldEvaluator::FieldEvaluator(const Curve& c, const SpectralPlan& plan)
    : points_(c.points()),
      tangent_(plan.derivative(c.points())),
      force_(plan.derivative(tangent_)),
      h_(plan.h()),
      mask_radius_(5.0 * plan.h() * max_norm(tangent_)) {
  require_size(c.size(), plan.n(), "FieldEvaluator");
}

FieldSample FieldEvaluator::operator()(Vec2 x) const {
  FieldSample s;
  s.point = x;
  const std::size_t n = points_.size();
  for (std::size_t l = 0; l < n; ++l) {
    if (norm(x - points_[l]) <= mask_radius_) {
      s.near_curve = true;
      s.u = {std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()};
      s.p = std::numeric_limits<double>::quiet_NaN();
      return s;
    }
  }
  // u = -int d/dtheta'[G(x - X')] dX'/dtheta' dtheta'; with r = x - X' the
  // theta' derivative of r is -T'.
  Vec2 u;
  double p = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    const Vec2 r = x - points_[l];
    const Vec2 t = tangent_[l];
    const Vec2 rdot = -t;
    const double r2 = dot(r, r);
    const double rr = dot(r, rdot);
    // dG * t, expanded without forming the matrix.
    const Vec2 dg_t = (-rr / r2) * t + (dot(r, t) / r2) * rdot + (dot(rdot, t) / r2) * r +
                      (-2.0 * rr * dot(r, t) / (r2 * r2)) * r;
    u = u - dg_t;
    p += dot(r, force_[l]) / r2;
  }
  s.u = (h_ / (4.0 * std::numbers::pi)) * u;
  s.p = p * h_ / (2.0 * std::numbers::pi);
  return s;
}

FieldSample field_at(const Curve& c, const SpectralPlan& plan, Vec2 x) { return FieldEvaluator(c, plan)(x); }

std::vector<FieldSample> field_grid(const Curve& c, const SpectralPlan& plan, const FieldGridSpec& spec) {
  if (spec.nx < 1 || spec.ny < 1) throw ArgumentError("field_grid: lattice needs at least one node per axis");
  if (!(spec.x_max >= spec.x_min) || !(spec.y_max >= spec.y_min)) throw ArgumentError("field_grid: empty bounds");
  const FieldEvaluator eval(c, plan);
  std::vector<FieldSample> out(spec.nx * spec.ny);
  const double dx = spec.nx > 1 ? (spec.x_max - spec.x_min) / static_cast<double>(spec.nx - 1) : 0.0;
  const double dy = spec.ny > 1 ? (spec.y_max - spec.y_min) / static_cast<double>(spec.ny - 1) : 0.0;
#pragma omp parallel for schedule(static)
  for (std::size_t j = 0; j < spec.ny; ++j) {
    for (std::size_t i = 0; i < spec.nx; ++i) {
      const Vec2 x{spec.x_min + dx * static_cast<double>(i), spec.y_min + dy * static_cast<double>(j)};
      out[j * spec.nx + i] = eval(x);
    }
  }
  return out;
}

}  // namespace peskin
