#include "peskin/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <string>

#include "peskin/errors.hpp"

namespace peskin {

namespace {

// FFTW's planner is not reentrant; execution on new arrays is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_complex* as_fftw(std::complex<double>* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

struct SpectralPlan::Impl {
  std::size_t n = 0;
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;

  explicit Impl(std::size_t size) : n(size) {
    std::vector<double> real(n);
    std::vector<std::complex<double>> half(n / 2 + 1);
    // ESTIMATE keeps plan selection deterministic, so traces are reproducible
    // from run to run.
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    std::lock_guard lock(planner_mutex());
    forward = fftw_plan_dft_r2c_1d(static_cast<int>(n), real.data(), as_fftw(half.data()), flags);
    inverse = fftw_plan_dft_c2r_1d(static_cast<int>(n), as_fftw(half.data()), real.data(), flags);
  }

  ~Impl() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(forward);
    fftw_destroy_plan(inverse);
  }

  Impl(const Impl&) = delete;
  Impl& operator=(const Impl&) = delete;

  // Multiplier on the nonnegative half of the spectrum, 0 <= k <= n/2.
  [[nodiscard]] std::complex<double> half_symbol(Symbol op, std::size_t k, double t) const {
    if (k == n / 2) return {0.0, 0.0};
    const double kk = static_cast<double>(k);
    switch (op) {
      case Symbol::derivative:
        return {0.0, kk};
      case Symbol::hilbert:
        return {0.0, k == 0 ? 0.0 : -1.0};
      case Symbol::lambda:
        return {-0.25 * kk, 0.0};
      case Symbol::semigroup:
        return {std::exp(-0.25 * t * kk), 0.0};
    }
    return {0.0, 0.0};
  }
};

SpectralPlan::SpectralPlan(std::size_t n) {
  if (n < 8 || n % 2 != 0) {
    throw ArgumentError("SpectralPlan: grid size must be even and >= 8, got " + std::to_string(n));
  }
  impl_ = std::make_shared<const Impl>(n);
}

std::size_t SpectralPlan::n() const noexcept { return impl_->n; }

std::complex<double> SpectralPlan::symbol(Symbol op, long k, double t) const {
  const long half = static_cast<long>(n() / 2);
  if (k <= -half || k > half) {
    throw ArgumentError("SpectralPlan::symbol: wavenumber " + std::to_string(k) + " out of range");
  }
  if (k >= 0) return impl_->half_symbol(op, static_cast<std::size_t>(k), t);
  // Real-to-real operators have conjugate-symmetric symbols.
  return std::conj(impl_->half_symbol(op, static_cast<std::size_t>(-k), t));
}

void SpectralPlan::forward(std::span<const double> v, std::span<std::complex<double>> spectrum) const {
  require_size(v.size(), n(), "SpectralPlan::forward input");
  require_size(spectrum.size(), n() / 2 + 1, "SpectralPlan::forward spectrum");
  // Out-of-place r2c leaves the input untouched.
  fftw_execute_dft_r2c(impl_->forward, const_cast<double*>(v.data()), as_fftw(spectrum.data()));
}

void SpectralPlan::inverse(std::span<std::complex<double>> spectrum, std::span<double> out) const {
  require_size(spectrum.size(), n() / 2 + 1, "SpectralPlan::inverse spectrum");
  require_size(out.size(), n(), "SpectralPlan::inverse output");
  fftw_execute_dft_c2r(impl_->inverse, as_fftw(spectrum.data()), out.data());
  const double scale = 1.0 / static_cast<double>(n());
  for (double& x : out) x *= scale;
}

void SpectralPlan::apply(Symbol op, std::span<const double> v, std::span<double> out, Scratch& scratch,
                         double t) const {
  if (op == Symbol::semigroup && !(t >= 0.0)) {
    throw ArgumentError("SpectralPlan::semigroup: time must be nonnegative, got " + std::to_string(t));
  }
  if (scratch.size() != n() / 2 + 1) scratch.resize(n() / 2 + 1);
  forward(v, scratch);
  for (std::size_t k = 0; k < scratch.size(); ++k) scratch[k] *= impl_->half_symbol(op, k, t);
  inverse(scratch, out);
}

ScalarGrid SpectralPlan::apply(Symbol op, std::span<const double> v, double t) const {
  ScalarGrid out(n());
  Scratch scratch = make_scratch();
  apply(op, v, out, scratch, t);
  return out;
}

VectorGrid SpectralPlan::apply(Symbol op, const VectorGrid& v, double t) const {
  VectorGrid out(n());
  Scratch scratch = make_scratch();
  apply(op, v.x(), out.x(), scratch, t);
  apply(op, v.y(), out.y(), scratch, t);
  return out;
}

ScalarGrid SpectralPlan::semigroup(double t, std::span<const double> v) const {
  return apply(Symbol::semigroup, v, t);
}

VectorGrid SpectralPlan::semigroup(double t, const VectorGrid& v) const {
  return apply(Symbol::semigroup, v, t);
}

}  // namespace peskin
