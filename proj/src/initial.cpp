#include "peskin/initial.hpp"

#include <cmath>

#include "peskin/errors.hpp"

namespace peskin {

namespace rng {

std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
  const std::uint64_t key = mix(seed ^ mix(stream));
  const std::uint64_t bits = mix(key + counter * 0x9e3779b97f4a7c15ULL);
  // 53 high bits -> [0, 1) -> [-1, 1)
  return 2.0 * (static_cast<double>(bits >> 11) * 0x1.0p-53) - 1.0;
}

}  // namespace rng

namespace {

double fourier_sum(const std::vector<double>& cos_c, const std::vector<double>& sin_c, double th) {
  double v = 0.0;
  for (std::size_t k = 0; k < cos_c.size(); ++k) v += cos_c[k] * std::cos(static_cast<double>(k) * th);
  for (std::size_t k = 0; k < sin_c.size(); ++k) v += sin_c[k] * std::sin(static_cast<double>(k) * th);
  return v;
}

}  // namespace

Curve make_initial(const InitialSpec& spec, std::size_t n) {
  VectorGrid pts(n);
  const std::string& name = spec.name;
  if (name == "demo") {
    for (std::size_t k = 0; k < n; ++k) {
      const double th = grid_angle(n, k);
      const double r = 1.0 + std::cos(7.0 * th) / 4.0;
      pts.set(k, {r * std::cos(th) + std::cos(2.0 * th) / 8.0, r * std::sin(th) + std::sin(2.0 * th) / 8.0});
    }
  } else if (name == "unlabeled") {
    for (std::size_t k = 0; k < n; ++k) {
      const double th = grid_angle(n, k);
      pts.set(k, {std::cos(th) + std::cos(2.0 * th) / 5.0 - std::sin(2.0 * th) / 10.0,
                  std::sin(th) + std::sin(2.0 * th) / 5.0 + std::cos(2.0 * th) / 10.0});
    }
  } else if (name == "labeled") {
    const double m = static_cast<double>(spec.m);
    for (std::size_t k = 0; k < n; ++k) {
      const double th = grid_angle(n, k);
      pts.set(k, {(1.0 + std::exp(std::cos(3.0 * th)) / 4.0) * std::cos(th),
                  (1.0 + std::exp(std::sin(m * th)) / 4.0) * std::sin(th)});
    }
  } else if (name == "circle") {
    if (!(spec.A * spec.A + spec.B * spec.B > 0.0)) throw ArgumentError("circle: need A^2 + B^2 > 0");
    for (std::size_t k = 0; k < n; ++k) {
      const double th = grid_angle(n, k);
      const double c = std::cos(th);
      const double s = std::sin(th);
      pts.set(k, {spec.A * c - spec.B * s + spec.C1, spec.A * s + spec.B * c + spec.C2});
    }
  } else if (name == "fourier") {
    if (spec.seed) {
      if (spec.modes < 2) throw ArgumentError("fourier: random modes must be >= 2");
      for (std::size_t k = 0; k < n; ++k) {
        const double th = grid_angle(n, k);
        Vec2 p{std::cos(th), std::sin(th)};
        for (std::size_t j = 2; j <= spec.modes; ++j) {
          const double w = spec.amplitude / static_cast<double>(j * j);
          const double cj = std::cos(static_cast<double>(j) * th);
          const double sj = std::sin(static_cast<double>(j) * th);
          p.x += w * (rng::uniform(*spec.seed, 0, j) * cj + rng::uniform(*spec.seed, 1, j) * sj);
          p.y += w * (rng::uniform(*spec.seed, 2, j) * cj + rng::uniform(*spec.seed, 3, j) * sj);
        }
        pts.set(k, p);
      }
    } else {
      if (spec.cos_x.empty() && spec.sin_x.empty() && spec.cos_y.empty() && spec.sin_y.empty()) {
        throw ArgumentError("fourier: give coefficient lists or a seed");
      }
      for (std::size_t k = 0; k < n; ++k) {
        const double th = grid_angle(n, k);
        pts.set(k, {fourier_sum(spec.cos_x, spec.sin_x, th), fourier_sum(spec.cos_y, spec.sin_y, th)});
      }
    }
  } else {
    throw ArgumentError("unknown initial condition '" + name + "'");
  }
  Curve c(std::move(pts));
  if (!(star_norm(c) > 0.0)) throw DegeneracyError("initial condition '" + name + "' has zero star norm");
  return c;
}

}  // namespace peskin
