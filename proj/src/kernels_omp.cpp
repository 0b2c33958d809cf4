#include "peskin/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>

#include "peskin/errors.hpp"

namespace peskin::kernels {

namespace {

// Exceptions must not cross an OpenMP region boundary; each row parks its
// failure and the lowest-indexed one is rethrown afterwards, which keeps the
// reported pair independent of scheduling.
void rethrow_first(const std::vector<std::exception_ptr>& errors) {
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

std::vector<double> chord_table(std::size_t n) {
  std::vector<double> chords(n, 0.0);
  for (std::size_t m = 1; m < n; ++m) {
    chords[m] = 2.0 * std::abs(std::sin(std::numbers::pi * static_cast<double>(m) / static_cast<double>(n)));
  }
  return chords;
}

double tangent_floor(const VectorGrid& tangent) { return 1e-12 * max_norm(tangent); }

void assemble_row(std::size_t k, const VectorGrid& points, const VectorGrid& tangent,
                  std::span<const double> chords, std::span<double> hxx, std::span<double> hxy,
                  std::span<double> hyy, double tangent_floor) {
  const std::size_t n = points.size();
  const Vec2 xk = points[k];
  for (std::size_t l = 0; l < n; ++l) {
    if (l == k) {
      const Vec2 t = tangent[k];
      const double t2 = dot(t, t);
      if (!(t2 > tangent_floor * tangent_floor) || !std::isfinite(t2)) throw DegeneracyError("vanishing tangent", k, k);
      const double lg = -0.5 * std::log(t2);
      hxx[l] = lg + t.x * t.x / t2;
      hxy[l] = t.x * t.y / t2;
      hyy[l] = lg + t.y * t.y / t2;
      continue;
    }
    const Vec2 d = xk - points[l];
    const double r2 = dot(d, d);
    if (!(r2 > 0.0)) throw DegeneracyError("coincident nodes", k, l);
    const double c = chords[k > l ? k - l : l - k];
    const double lg = -0.5 * std::log(r2 / (c * c));
    hxx[l] = lg + d.x * d.x / r2;
    hxy[l] = d.x * d.y / r2;
    hyy[l] = lg + d.y * d.y / r2;
  }
}

BlockKernel kernel_matrix(const VectorGrid& points, const VectorGrid& tangent) {
  const std::size_t n = points.size();
  require_size(tangent.size(), n, "kernel_matrix tangent");
  const std::vector<double> chords = chord_table(n);
  const double floor = tangent_floor(tangent);
  BlockKernel out(n);
  std::vector<std::exception_ptr> errors(n);
#pragma omp parallel
  {
    std::vector<double> hxx(n), hxy(n), hyy(n);
#pragma omp for schedule(static)
    for (std::size_t k = 0; k < n; ++k) {
      try {
        assemble_row(k, points, tangent, chords, hxx, hxy, hyy, floor);
        for (std::size_t l = 0; l < n; ++l) out(k, l) = Mat2{hxx[l], hxy[l], hxy[l], hyy[l]};
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  }
  rethrow_first(errors);
  return out;
}

VectorGrid remainder(const VectorGrid& points, const VectorGrid& tangent, const SpectralPlan& plan) {
  const std::size_t n = points.size();
  require_size(n, plan.n(), "remainder");
  require_size(tangent.size(), n, "remainder tangent");
  const std::vector<double> chords = chord_table(n);
  const double floor = tangent_floor(tangent);
  const double scale = -plan.h() / (4.0 * std::numbers::pi);
  VectorGrid out(n);
  std::vector<std::exception_ptr> errors(n);
#pragma omp parallel
  {
    std::vector<double> hxx(n), hxy(n), hyy(n), dxx(n), dxy(n), dyy(n);
    SpectralPlan::Scratch scratch = plan.make_scratch();
#pragma omp for schedule(static)
    for (std::size_t k = 0; k < n; ++k) {
      try {
        assemble_row(k, points, tangent, chords, hxx, hxy, hyy, floor);
        plan.apply(Symbol::derivative, hxx, dxx, scratch);
        plan.apply(Symbol::derivative, hxy, dxy, scratch);
        plan.apply(Symbol::derivative, hyy, dyy, scratch);
        double rx = 0.0;
        double ry = 0.0;
        for (std::size_t l = 0; l < n; ++l) {
          const double tx = tangent.x()[l];
          const double ty = tangent.y()[l];
          rx += dxx[l] * tx + dxy[l] * ty;
          ry += dxy[l] * tx + dyy[l] * ty;
        }
        out.set(k, {scale * rx, scale * ry});
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  }
  rethrow_first(errors);
  return out;
}

double min_chord_ratio(const VectorGrid& points) {
  const std::size_t n = points.size();
  std::vector<double> row_min(n, std::numeric_limits<double>::infinity());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::size_t k = 0; k < n; ++k) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t l = k + 1; l < n; ++l) {
      m = std::min(m, norm(points[k] - points[l]) / circle_distance(n, k, l));
    }
    row_min[k] = m;
  }
  const double m = *std::min_element(row_min.begin(), row_min.end());
  return std::isfinite(m) ? m : 0.0;
}

namespace {

template <class Diff>
double max_holder_ratio_impl(std::size_t n, double gamma, Diff&& diff) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw ArgumentError("holder_seminorm: gamma must lie in (0, 1), got " + std::to_string(gamma));
  }
  std::vector<double> row_max(n, 0.0);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::size_t k = 0; k < n; ++k) {
    double m = 0.0;
    for (std::size_t l = k + 1; l < n; ++l) {
      const double d = circle_distance(n, k, l);
      if (d >= 1.0) continue;
      m = std::max(m, diff(k, l) / std::pow(d, gamma));
    }
    row_max[k] = m;
  }
  return n == 0 ? 0.0 : *std::max_element(row_max.begin(), row_max.end());
}

}  // namespace

double max_holder_ratio(const VectorGrid& v, double gamma) {
  return max_holder_ratio_impl(v.size(), gamma, [&](std::size_t k, std::size_t l) { return norm(v[k] - v[l]); });
}

double max_holder_ratio(std::span<const double> v, double gamma) {
  return max_holder_ratio_impl(v.size(), gamma, [&](std::size_t k, std::size_t l) { return std::abs(v[k] - v[l]); });
}

void set_num_threads(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace peskin::kernels
