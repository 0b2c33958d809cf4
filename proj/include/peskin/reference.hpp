#pragma once

// Serial reference implementations of the parallel kernels. They favour the
// most literal reading of each formula (full kernel matrix, then one column
// derivative pass per entry, then the contraction) and are kept for tests and
// benchmarks.

#include <span>

#include "peskin/biop.hpp"
#include "peskin/curve.hpp"
#include "peskin/spectral.hpp"

namespace peskin::reference {

BlockKernel kernel_matrix(const Curve& c, const SpectralPlan& plan);
VectorGrid remainder(const Curve& c, const SpectralPlan& plan);
double star_norm(const Curve& c);
double holder_seminorm(const VectorGrid& v, double gamma);

}  // namespace peskin::reference
