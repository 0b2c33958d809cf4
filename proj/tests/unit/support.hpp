#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <numbers>
#include <string>
#include <vector>

#include "peskin/curve.hpp"
#include "peskin/grid.hpp"
#include "peskin/initial.hpp"

namespace testing {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(PESKIN_TEST_DATA_DIR) / name;
}

inline std::filesystem::path scratch_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("peskin_test_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

// A e_r + B e_t + (C1, C2)
inline peskin::Curve circle(std::size_t n, double a = 1.0, double b = 0.0, double c1 = 0.0, double c2 = 0.0) {
  peskin::VectorGrid g(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = peskin::grid_angle(n, k);
    g.set(k, {a * std::cos(t) - b * std::sin(t) + c1, a * std::sin(t) + b * std::cos(t) + c2});
  }
  return peskin::Curve(std::move(g));
}

inline peskin::Curve named(const std::string& name, std::size_t n, int m = 3) {
  peskin::InitialSpec s;
  s.name = name;
  s.m = m;
  return peskin::make_initial(s, n);
}

// smooth star-shaped curve with a few random low modes
inline peskin::Curve random_curve(std::size_t n, std::uint64_t seed, std::size_t modes = 5, double amp = 0.1) {
  peskin::InitialSpec s;
  s.name = "fourier";
  s.seed = seed;
  s.modes = modes;
  s.amplitude = amp;
  return peskin::make_initial(s, n);
}

// band-limited random scalar field, modes 0..kmax
inline std::vector<double> random_field(std::size_t n, std::uint64_t seed, std::size_t kmax) {
  std::vector<double> v(n, 0.0);
  for (std::size_t j = 0; j <= kmax; ++j) {
    const double a = peskin::rng::uniform(seed, 10, j);
    const double b = peskin::rng::uniform(seed, 11, j);
    for (std::size_t k = 0; k < n; ++k) {
      const double t = peskin::grid_angle(n, k);
      v[k] += a * std::cos(static_cast<double>(j) * t) + b * std::sin(static_cast<double>(j) * t);
    }
  }
  return v;
}

// grid noise, every mode present (including Nyquist)
inline std::vector<double> random_samples(std::size_t n, std::uint64_t seed) {
  std::vector<double> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = peskin::rng::uniform(seed, 12, k);
  return v;
}

inline peskin::VectorGrid rotate(const peskin::VectorGrid& v, double phi) {
  peskin::VectorGrid out(v.size());
  const double c = std::cos(phi), s = std::sin(phi);
  for (std::size_t k = 0; k < v.size(); ++k) out.set(k, {c * v[k].x - s * v[k].y, s * v[k].x + c * v[k].y});
  return out;
}

inline peskin::VectorGrid translate(const peskin::VectorGrid& v, double dx, double dy) {
  peskin::VectorGrid out = v;
  for (auto& x : out.x()) x += dx;
  for (auto& y : out.y()) y += dy;
  return out;
}

inline double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

inline double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace testing
