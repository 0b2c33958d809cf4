#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "peskin/grid.hpp"

namespace peskin {

enum class Symbol { derivative, hilbert, lambda, semigroup };

/// Fourier-multiplier operators on the uniform periodic grid of even size n.
///
/// Wavenumbers run over k = -n/2+1 ... n/2. Every multiplier is zero at the
/// Nyquist mode k = n/2. Forward transforms are unnormalized and the inverse
/// carries the 1/n.
///
/// A plan is immutable and may be shared between threads; the overloads that
/// take a scratch span let hot loops avoid allocation, with the scratch owned
/// by the caller.
class SpectralPlan {
 public:
  using Scratch = std::vector<std::complex<double>>;

  explicit SpectralPlan(std::size_t n);

  [[nodiscard]] std::size_t n() const noexcept;
  [[nodiscard]] std::size_t nyquist_index() const noexcept { return n() / 2; }
  [[nodiscard]] double h() const noexcept { return grid_spacing(n()); }
  [[nodiscard]] double theta(std::size_t k) const noexcept { return grid_angle(n(), k); }

  /// Multiplier of `op` at wavenumber k in [-n/2+1, n/2]; t only matters
  /// for the semigroup.
  [[nodiscard]] std::complex<double> symbol(Symbol op, long k, double t = 0.0) const;

  /// Half-spectrum scratch of the right length (n/2 + 1).
  [[nodiscard]] Scratch make_scratch() const { return Scratch(n() / 2 + 1); }

  void forward(std::span<const double> v, std::span<std::complex<double>> spectrum) const;
  /// Consumes `spectrum` (the c2r transform overwrites it).
  void inverse(std::span<std::complex<double>> spectrum, std::span<double> out) const;

  void apply(Symbol op, std::span<const double> v, std::span<double> out, Scratch& scratch,
             double t = 0.0) const;

  [[nodiscard]] ScalarGrid apply(Symbol op, std::span<const double> v, double t = 0.0) const;
  [[nodiscard]] VectorGrid apply(Symbol op, const VectorGrid& v, double t = 0.0) const;

  [[nodiscard]] ScalarGrid derivative(std::span<const double> v) const { return apply(Symbol::derivative, v); }
  [[nodiscard]] VectorGrid derivative(const VectorGrid& v) const { return apply(Symbol::derivative, v); }
  [[nodiscard]] ScalarGrid hilbert(std::span<const double> v) const { return apply(Symbol::hilbert, v); }
  [[nodiscard]] VectorGrid hilbert(const VectorGrid& v) const { return apply(Symbol::hilbert, v); }
  [[nodiscard]] ScalarGrid lambda(std::span<const double> v) const { return apply(Symbol::lambda, v); }
  [[nodiscard]] VectorGrid lambda(const VectorGrid& v) const { return apply(Symbol::lambda, v); }
  /// Poisson-kernel semigroup e^{t Lambda}; t must be nonnegative.
  [[nodiscard]] ScalarGrid semigroup(double t, std::span<const double> v) const;
  [[nodiscard]] VectorGrid semigroup(double t, const VectorGrid& v) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

}  // namespace peskin
