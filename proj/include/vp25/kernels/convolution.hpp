#pragma once

#include "vp25/fieldsolve/grid.hpp"

namespace vp25::kernels {

// Direct O(N^2) node sums with the same kernel tables as PoissonSolver.
// Reference implementations for testing the FFT path.
namespace serial {
void direct_field(Grid2D& grid);
}
namespace omp {
void direct_field(Grid2D& grid);
}

}  // namespace vp25::kernels
