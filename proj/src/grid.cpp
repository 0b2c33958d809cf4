#include "peskin/grid.hpp"

#include <algorithm>
#include <string>

#include "peskin/errors.hpp"

namespace peskin {

void require_size(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw ArgumentError(std::string(what) + ": size " + std::to_string(got) + " does not match " +
                        std::to_string(want));
  }
}

VectorGrid::VectorGrid(std::vector<double> x, std::vector<double> y) : x_(std::move(x)), y_(std::move(y)) {
  require_size(y_.size(), x_.size(), "VectorGrid components");
}

VectorGrid& VectorGrid::operator+=(const VectorGrid& o) {
  require_size(o.size(), size(), "VectorGrid +=");
  for (std::size_t k = 0; k < size(); ++k) {
    x_[k] += o.x_[k];
    y_[k] += o.y_[k];
  }
  return *this;
}

VectorGrid& VectorGrid::operator-=(const VectorGrid& o) {
  require_size(o.size(), size(), "VectorGrid -=");
  for (std::size_t k = 0; k < size(); ++k) {
    x_[k] -= o.x_[k];
    y_[k] -= o.y_[k];
  }
  return *this;
}

VectorGrid& VectorGrid::operator*=(double s) {
  for (std::size_t k = 0; k < size(); ++k) {
    x_[k] *= s;
    y_[k] *= s;
  }
  return *this;
}

VectorGrid& VectorGrid::axpy(double s, const VectorGrid& o) {
  require_size(o.size(), size(), "VectorGrid axpy");
  for (std::size_t k = 0; k < size(); ++k) {
    x_[k] += s * o.x_[k];
    y_[k] += s * o.y_[k];
  }
  return *this;
}

double max_norm(const VectorGrid& v) {
  double m = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k) m = std::max(m, norm(v[k]));
  return m;
}

double max_distance(const VectorGrid& a, const VectorGrid& b) {
  require_size(b.size(), a.size(), "max_distance");
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, norm(a[k] - b[k]));
  return m;
}

VectorGrid restrict_to(const VectorGrid& fine, std::size_t n_coarse) {
  if (n_coarse == 0 || fine.size() % n_coarse != 0) {
    throw ArgumentError("restrict_to: " + std::to_string(n_coarse) + " does not divide " +
                        std::to_string(fine.size()));
  }
  const std::size_t stride = fine.size() / n_coarse;
  VectorGrid out(n_coarse);
  for (std::size_t k = 0; k < n_coarse; ++k) out.set(k, fine[k * stride]);
  return out;
}

}  // namespace peskin
