#pragma once

#include <cstddef>
#include <vector>

#include "peskin/curve.hpp"
#include "peskin/grid.hpp"
#include "peskin/spectral.hpp"

namespace peskin {

struct Mat2 {
  double xx = 0.0;
  double xy = 0.0;
  double yx = 0.0;
  double yy = 0.0;

  [[nodiscard]] constexpr Vec2 operator*(Vec2 v) const { return {xx * v.x + xy * v.y, yx * v.x + yy * v.y}; }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// N x N array of 2 x 2 blocks of the combined remainder kernel H.
class BlockKernel {
 public:
  explicit BlockKernel(std::size_t n) : n_(n), blocks_(n * n) {}

  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] const Mat2& operator()(std::size_t k, std::size_t l) const { return blocks_[k * n_ + l]; }
  Mat2& operator()(std::size_t k, std::size_t l) { return blocks_[k * n_ + l]; }

 private:
  std::size_t n_;
  std::vector<Mat2> blocks_;
};

/// H_kl = -log(|X_k - X_l| / (2|sin((theta_k - theta_l)/2)|)) I + dX dX^T / |dX|^2 for l != k,
/// H_kk = -log|T_k| I + T_k T_k^T / |T_k|^2 with T = D_h X.
BlockKernel kernel_matrix(const Curve& c, const SpectralPlan& plan);

/// R_{h,k} = -(1/4pi) sum_l (D_{h,j} H_kj)_l (D_h X)_l h, the spectral derivative
/// taken along the column index of each kernel row.
VectorGrid remainder(const Curve& c, const SpectralPlan& plan);

/// Lambda X + R_h(X).
VectorGrid rhs(const Curve& c, const SpectralPlan& plan);

/// Central difference (rhs(X + eps d) - rhs(X - eps d)) / (2 eps).
VectorGrid linearize_rhs(const Curve& base, const VectorGrid& direction, double eps, const SpectralPlan& plan);
/// 1e-5 * ||base||_{C^1_h}
double default_linearization_eps(const Curve& base, const SpectralPlan& plan);

/// (1/4pi)(-log|x| I + x x^T / |x|^2); x must be nonzero.
Mat2 stokeslet(Vec2 x);

struct FieldSample {
  Vec2 point;
  Vec2 u;
  double p = 0.0;
  bool near_curve = false;
};

/// Off-curve velocity and pressure by the trapezoid rule. Velocity uses the
/// integrated-by-parts kernel, pressure the pressure Stokeslet against D_h^2 X.
/// Points within mask_radius() of a node come back flagged near_curve with
/// u and p left as NaN.
class FieldEvaluator {
 public:
  FieldEvaluator(const Curve& c, const SpectralPlan& plan);

  [[nodiscard]] double mask_radius() const noexcept { return mask_radius_; }
  [[nodiscard]] FieldSample operator()(Vec2 x) const;

 private:
  VectorGrid points_;
  VectorGrid tangent_;
  VectorGrid force_;
  double h_;
  double mask_radius_;
};

FieldSample field_at(const Curve& c, const SpectralPlan& plan, Vec2 x);

struct FieldGridSpec {
  double x_min = -2.0;
  double x_max = 2.0;
  double y_min = -2.0;
  double y_max = 2.0;
  std::size_t nx = 81;
  std::size_t ny = 81;
};

/// Row-major over y then x.
std::vector<FieldSample> field_grid(const Curve& c, const SpectralPlan& plan, const FieldGridSpec& spec);

}  // namespace peskin
