#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

namespace peskin {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

/// Real scalar function sampled on the uniform periodic grid.
using ScalarGrid = std::vector<double>;

/// Planar vector function on the uniform periodic grid, stored as two
/// component arrays so each can go through a real transform on its own.
class VectorGrid {
 public:
  VectorGrid() = default;
  explicit VectorGrid(std::size_t n) : x_(n, 0.0), y_(n, 0.0) {}
  VectorGrid(std::vector<double> x, std::vector<double> y);

  [[nodiscard]] std::size_t size() const noexcept { return x_.size(); }
  [[nodiscard]] const std::vector<double>& x() const noexcept { return x_; }
  [[nodiscard]] const std::vector<double>& y() const noexcept { return y_; }
  std::vector<double>& x() noexcept { return x_; }
  std::vector<double>& y() noexcept { return y_; }

  [[nodiscard]] Vec2 operator[](std::size_t k) const { return {x_[k], y_[k]}; }
  void set(std::size_t k, Vec2 v) {
    x_[k] = v.x;
    y_[k] = v.y;
  }

  VectorGrid& operator+=(const VectorGrid& o);
  VectorGrid& operator-=(const VectorGrid& o);
  VectorGrid& operator*=(double s);
  /// this += s * o
  VectorGrid& axpy(double s, const VectorGrid& o);

  friend VectorGrid operator+(VectorGrid a, const VectorGrid& b) { return a += b; }
  friend VectorGrid operator-(VectorGrid a, const VectorGrid& b) { return a -= b; }
  friend VectorGrid operator*(double s, VectorGrid a) { return a *= s; }
  friend bool operator==(const VectorGrid&, const VectorGrid&) = default;

 private:
  std::vector<double> x_;
  std::vector<double> y_;
};

/// max_k |v_k| with the Euclidean length per node.
double max_norm(const VectorGrid& v);
/// max_k |a_k - b_k|.
double max_distance(const VectorGrid& a, const VectorGrid& b);
/// Every N_fine/N_coarse-th node of a fine grid.
VectorGrid restrict_to(const VectorGrid& fine, std::size_t n_coarse);

inline double grid_spacing(std::size_t n) { return 2.0 * std::numbers::pi / static_cast<double>(n); }
inline double grid_angle(std::size_t n, std::size_t k) { return grid_spacing(n) * static_cast<double>(k); }

/// Circle distance min(|k-l|, n-|k-l|) * h between two grid nodes.
inline double circle_distance(std::size_t n, std::size_t k, std::size_t l) {
  const std::size_t m = k > l ? k - l : l - k;
  return static_cast<double>(m < n - m ? m : n - m) * grid_spacing(n);
}

void require_size(std::size_t got, std::size_t want, const char* what);

}  // namespace peskin
