#pragma once

// OpenMP-parallel O(N^2) kernels. Each parallel loop is over rows (or node
// k), and every row is computed with the same arithmetic as the serial
// reference in reference.hpp, so results do not depend on the thread count.

#include <cstddef>
#include <span>
#include <vector>

#include "peskin/biop.hpp"
#include "peskin/grid.hpp"
#include "peskin/spectral.hpp"

namespace peskin::kernels {

/// 2|sin(m pi / n)| for m = 0 .. n-1; the m = 0 entry is unused.
std::vector<double> chord_table(std::size_t n);

/// Tangents shorter than this count as vanishing: 1e-12 sup|T|.
double tangent_floor(const VectorGrid& tangent);

/// Fill the three independent entries of kernel row k (H is symmetric per block).
/// Throws DegeneracyError on coincident nodes or a tangent no longer than `tangent_floor`.
void assemble_row(std::size_t k, const VectorGrid& points, const VectorGrid& tangent,
                  std::span<const double> chords, std::span<double> hxx, std::span<double> hxy,
                  std::span<double> hyy, double tangent_floor);

BlockKernel kernel_matrix(const VectorGrid& points, const VectorGrid& tangent);

/// Fused row assembly, column derivative and contraction.
VectorGrid remainder(const VectorGrid& points, const VectorGrid& tangent, const SpectralPlan& plan);

double min_chord_ratio(const VectorGrid& points);
double max_holder_ratio(const VectorGrid& v, double gamma);
double max_holder_ratio(std::span<const double> v, double gamma);

void set_num_threads(int threads);
int max_threads();

}  // namespace peskin::kernels
