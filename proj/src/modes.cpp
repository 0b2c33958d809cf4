#include "peskin/modes.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "peskin/curve.hpp"
#include "peskin/errors.hpp"

namespace peskin {

double ModeCoeffs::euclidean_norm() const { return std::sqrt(a_x * a_x + a_y * a_y + a_r * a_r + a_t * a_t); }

ModeBasis basis(std::size_t n) {
  ModeBasis b{VectorGrid(n), VectorGrid(n), VectorGrid(n), VectorGrid(n)};
  for (std::size_t k = 0; k < n; ++k) {
    const double th = grid_angle(n, k);
    const double c = std::cos(th);
    const double s = std::sin(th);
    b.e_x.set(k, {1.0, 0.0});
    b.e_y.set(k, {0.0, 1.0});
    b.e_r.set(k, {c, s});
    b.e_t.set(k, {-s, c});
  }
  return b;
}

double inner(const VectorGrid& v, const VectorGrid& w) {
  require_size(w.size(), v.size(), "inner");
  double sum = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k) sum += v.x()[k] * w.x()[k] + v.y()[k] * w.y()[k];
  return sum * grid_spacing(v.size());
}

ModeCoeffs coeffs(const VectorGrid& v) {
  const ModeBasis b = basis(v.size());
  const double s = 1.0 / (2.0 * std::numbers::pi);
  return {s * inner(v, b.e_x), s * inner(v, b.e_y), s * inner(v, b.e_r), s * inner(v, b.e_t)};
}

VectorGrid reconstruct(const ModeCoeffs& a, std::size_t n) {
  const ModeBasis b = basis(n);
  VectorGrid out(n);
  out.axpy(a.a_x, b.e_x).axpy(a.a_y, b.e_y).axpy(a.a_r, b.e_r).axpy(a.a_t, b.e_t);
  return out;
}

VectorGrid project_P(const VectorGrid& v) { return reconstruct(coeffs(v), v.size()); }

VectorGrid project_Pi(const VectorGrid& v) { return v - project_P(v); }

DecaySeries decay_metrics(std::span<const TraceRecord> trace) {
  if (trace.size() < 2) throw ArgumentError("decay_metrics: need at least two trace records");
  const double stride = trace[1].t - trace[0].t;
  if (!(stride > 0.0)) throw ArgumentError("decay_metrics: record times must increase");
  for (std::size_t i = 1; i + 1 < trace.size(); ++i) {
    const double d = trace[i + 1].t - trace[i].t;
    if (std::abs(d - stride) > 1e-9 * stride) {
      throw ArgumentError("decay_metrics: nonuniform record stride at t = " + std::to_string(trace[i].t));
    }
  }
  DecaySeries out;
  out.log_pi_c1h.reserve(trace.size());
  out.log_dta.reserve(trace.size() - 1);
  for (const TraceRecord& r : trace) out.log_pi_c1h.push_back({r.t, std::log(r.c1h_pi_norm)});
  for (std::size_t i = 0; i + 1 < trace.size(); ++i) {
    const double dt = trace[i + 1].t - trace[i].t;
    const double rate = (trace[i + 1].coeffs - trace[i].coeffs).euclidean_norm() / dt;
    out.log_dta.push_back({0.5 * (trace[i].t + trace[i + 1].t), std::log(rate)});
  }
  return out;
}

SlopeFit fit_slope(std::span<const SeriesPoint> series, double t_min, double t_max) {
  const double floor = std::log(1e-13);
  double st = 0.0;
  double sv = 0.0;
  std::size_t m = 0;
  for (const SeriesPoint& p : series) {
    if (p.t < t_min || p.t > t_max) continue;
    if (!std::isfinite(p.value) || p.value < floor) {
      throw WindowError("fit_slope: value at or below the roundoff floor at t = " + std::to_string(p.t));
    }
    st += p.t;
    sv += p.value;
    ++m;
  }
  if (m < 10) {
    throw WindowError("fit_slope: only " + std::to_string(m) + " points in [" + std::to_string(t_min) + ", " +
                      std::to_string(t_max) + "], need 10");
  }
  const double mt = st / static_cast<double>(m);
  const double mv = sv / static_cast<double>(m);
  double sxx = 0.0;
  double sxy = 0.0;
  for (const SeriesPoint& p : series) {
    if (p.t < t_min || p.t > t_max) continue;
    sxx += (p.t - mt) * (p.t - mt);
    sxy += (p.t - mt) * (p.value - mv);
  }
  if (!(sxx > 0.0)) throw WindowError("fit_slope: window has no spread in t");
  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mv - fit.slope * mt;
  fit.points = m;
  double ss = 0.0;
  for (const SeriesPoint& p : series) {
    if (p.t < t_min || p.t > t_max) continue;
    const double res = p.value - (fit.intercept + fit.slope * p.t);
    ss += res * res;
  }
  fit.stderr_slope = std::sqrt(ss / static_cast<double>(m - 2) / sxx);
  return fit;
}

}  // namespace peskin
