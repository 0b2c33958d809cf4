#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "peskin/curve.hpp"

namespace peskin {

/// Initial-condition descriptor. `name` selects the family; only the fields of
/// that family are read.
struct InitialSpec {
  std::string name = "demo";  // demo | unlabeled | labeled | circle | fourier

  int m = 3;  // labeled: ((1 + e^{cos 3t}/4) cos t, (1 + e^{sin mt}/4) sin t)

  // circle: A e_r + B e_t + C1 e_x + C2 e_y
  double A = 1.0;
  double B = 0.0;
  double C1 = 0.0;
  double C2 = 0.0;

  // fourier with explicit coefficients: x = sum_k cos_x[k] cos kt + sin_x[k] sin kt, same for y.
  std::vector<double> cos_x, sin_x, cos_y, sin_y;
  // fourier with a seed: unit circle plus random modes 2..modes of size amplitude/k^2.
  std::optional<std::uint64_t> seed;
  std::size_t modes = 6;
  double amplitude = 0.05;
};

/// Samples the closed-form curve at theta_k. Throws ArgumentError for an
/// unknown family or a degenerate circle and DegeneracyError when the sampled
/// curve has zero star norm.
Curve make_initial(const InitialSpec& spec, std::size_t n);

namespace rng {

/// SplitMix64 finalizer.
std::uint64_t mix(std::uint64_t z);

/// Counter-based draw: the value for (seed, stream, counter) is a pure
/// function of the triple, so streams can be split without shared state and
/// results do not depend on call order or platform.
/// Returns a double uniform on [-1, 1).
double uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

}  // namespace rng

}  // namespace peskin
