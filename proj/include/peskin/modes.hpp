#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "peskin/grid.hpp"

namespace peskin {

struct TraceRecord;

/// Coordinates of a grid function in the circle-mode basis {e_x, e_y, e_r, e_t}.
struct ModeCoeffs {
  double a_x = 0.0;
  double a_y = 0.0;
  double a_r = 0.0;
  double a_t = 0.0;

  [[nodiscard]] double euclidean_norm() const;
  friend ModeCoeffs operator-(const ModeCoeffs& a, const ModeCoeffs& b) {
    return {a.a_x - b.a_x, a.a_y - b.a_y, a.a_r - b.a_r, a.a_t - b.a_t};
  }
  friend bool operator==(const ModeCoeffs&, const ModeCoeffs&) = default;
};

/// The zero eigenspace of the linearization at a circle, sampled on the grid:
/// translations e_x, e_y, dilation e_r and rotation e_t.
struct ModeBasis {
  VectorGrid e_x;
  VectorGrid e_y;
  VectorGrid e_r;
  VectorGrid e_t;
};

ModeBasis basis(std::size_t n);

/// <V, W>_h = sum_k V_k . W_k h
double inner(const VectorGrid& v, const VectorGrid& w);

ModeCoeffs coeffs(const VectorGrid& v);
VectorGrid reconstruct(const ModeCoeffs& a, std::size_t n);
VectorGrid project_P(const VectorGrid& v);
VectorGrid project_Pi(const VectorGrid& v);

struct SeriesPoint {
  double t = 0.0;
  double value = 0.0;
};
using Series = std::vector<SeriesPoint>;

/// log ||Pi_h X||_{C^1_h} at record times, and log |D_t a| at the midpoints
/// between consecutive records.
struct DecaySeries {
  Series log_pi_c1h;
  Series log_dta;
};

/// Records must be at a uniform time stride.
DecaySeries decay_metrics(std::span<const TraceRecord> trace);

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double stderr_slope = 0.0;
  std::size_t points = 0;
};

/// Ordinary least squares of value against t over points with t in [t_min, t_max].
/// Throws WindowError with fewer than 10 points or any value below log(1e-13).
SlopeFit fit_slope(std::span<const SeriesPoint> series, double t_min, double t_max);

}  // namespace peskin
