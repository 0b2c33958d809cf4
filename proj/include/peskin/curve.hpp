#pragma once

#include <cstddef>
#include <span>

#include "peskin/grid.hpp"
#include "peskin/modes.hpp"
#include "peskin/spectral.hpp"

namespace peskin {

/// Filament configuration X(theta_k) on the uniform grid. Coordinates are
/// always finite; construction throws DegeneracyError otherwise.
class Curve {
 public:
  explicit Curve(VectorGrid points);

  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
  [[nodiscard]] const VectorGrid& points() const noexcept { return points_; }
  [[nodiscard]] Vec2 operator[](std::size_t k) const { return points_[k]; }

 private:
  VectorGrid points_;
};

/// One diagnostics row of a simulation.
struct TraceRecord {
  double t = 0.0;
  double energy = 0.0;
  double area = 0.0;
  double star_norm = 0.0;
  double c1h_pi_norm = 0.0;
  ModeCoeffs coeffs;
  double deformation_ratio_0 = 0.0;
  double max_speed = 0.0;
  bool partial_step = false;
};

/// Discrete arc-chord constant: min over node pairs of |X_k - X_l| / d(theta_k, theta_l).
/// Zero when two nodes coincide.
double star_norm(const Curve& c);

double area(const Curve& c, const SpectralPlan& plan);
double energy(const Curve& c, const SpectralPlan& plan);

/// max over node pairs with 0 < d < 1 of |v_k - v_l| / d^gamma, gamma in (0, 1).
double holder_seminorm(std::span<const double> v, double gamma);
double holder_seminorm(const VectorGrid& v, double gamma);

/// (sup|D_h X| + <D_h X>_gamma) / star_norm; throws DegeneracyError when star_norm is 0.
double deformation_ratio(const Curve& c, const SpectralPlan& plan, double gamma);
/// sup|D_h X| / star_norm.
double deformation_ratio_0(const Curve& c, const SpectralPlan& plan);

/// sup_k |V_k| + sup_k |(D_h V)_k|
double c1h_norm(const VectorGrid& v, const SpectralPlan& plan);
double c1h_norm(std::span<const double> v, const SpectralPlan& plan);

}  // namespace peskin
