#include "peskin/reference.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>

#include "peskin/errors.hpp"

namespace peskin::reference {

BlockKernel kernel_matrix(const Curve& c, const SpectralPlan& plan) {
  const std::size_t n = c.size();
  require_size(n, plan.n(), "reference::kernel_matrix");
  const VectorGrid tangent = plan.derivative(c.points());
  const double floor = 1e-12 * max_norm(tangent);
  BlockKernel out(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      if (l == k) {
        const Vec2 t = tangent[k];
        const double len = norm(t);
        if (!(len > floor)) throw DegeneracyError("vanishing tangent", k, k);
        const double lg = -std::log(len);
        const double t2 = dot(t, t);
        out(k, k) = Mat2{lg + t.x * t.x / t2, t.x * t.y / t2, t.y * t.x / t2, lg + t.y * t.y / t2};
        continue;
      }
      const Vec2 d = c[k] - c[l];
      const double r = norm(d);
      if (!(r > 0.0)) throw DegeneracyError("coincident nodes", k, l);
      const double half_angle = 0.5 * (plan.theta(k) - plan.theta(l));
      const double lg = -std::log(r / (2.0 * std::abs(std::sin(half_angle))));
      const double r2 = dot(d, d);
      out(k, l) = Mat2{lg + d.x * d.x / r2, d.x * d.y / r2, d.y * d.x / r2, lg + d.y * d.y / r2};
    }
  }
  return out;
}

VectorGrid remainder(const Curve& c, const SpectralPlan& plan) {
  const std::size_t n = c.size();
  const BlockKernel kernel = reference::kernel_matrix(c, plan);
  const VectorGrid tangent = plan.derivative(c.points());
  VectorGrid out(n);
  ScalarGrid xx(n), xy(n), yx(n), yy(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      const Mat2& b = kernel(k, j);
      xx[j] = b.xx;
      xy[j] = b.xy;
      yx[j] = b.yx;
      yy[j] = b.yy;
    }
    const ScalarGrid dxx = plan.derivative(xx);
    const ScalarGrid dxy = plan.derivative(xy);
    const ScalarGrid dyx = plan.derivative(yx);
    const ScalarGrid dyy = plan.derivative(yy);
    Vec2 sum;
    for (std::size_t l = 0; l < n; ++l) {
      const Mat2 dh{dxx[l], dxy[l], dyx[l], dyy[l]};
      sum = sum + dh * tangent[l];
    }
    out.set(k, (-plan.h() / (4.0 * std::numbers::pi)) * sum);
  }
  return out;
}

double star_norm(const Curve& c) {
  const std::size_t n = c.size();
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      if (l == k) continue;
      m = std::min(m, norm(c[k] - c[l]) / circle_distance(n, k, l));
    }
  }
  return std::isfinite(m) ? m : 0.0;
}

double holder_seminorm(const VectorGrid& v, double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) throw ArgumentError("holder_seminorm: gamma must lie in (0, 1)");
  const std::size_t n = v.size();
  double m = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      const double d = circle_distance(n, k, l);
      if (d > 0.0 && d < 1.0) m = std::max(m, norm(v[k] - v[l]) / std::pow(d, gamma));
    }
  }
  return m;
}

}  // namespace peskin::reference
