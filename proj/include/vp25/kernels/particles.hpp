#pragma once

#include <cstddef>
#include <vector>

#include "vp25/core/species.hpp"
#include "vp25/fieldsolve/external_field.hpp"
#include "vp25/fieldsolve/interp.hpp"

namespace vp25::kernels {

/// Structure-of-arrays view of one species' markers.
struct MarkerSpan {
  double* x = nullptr;
  double* y = nullptr;
  double* px = nullptr;
  double* py = nullptr;
  double* pz = nullptr;
  const double* weight = nullptr;
  std::size_t n = 0;
  Species species = Species::plus;
};

namespace serial {
/// x += a * (px, py)
void drift(MarkerSpan m, double a);
/// Cloud-in-cell deposition of weight/h^2 onto rho (accumulates).
/// Throws MarkerEscape for a marker outside the interior cells.
void deposit(const MarkerSpan& m, const GridGeometry& g, std::vector<double>& rho);
/// Boris kick-rotate-kick with bilinear E from the grid and analytic B.
void kick(MarkerSpan m, const GridGeometry& g, const std::vector<double>& Ex,
          const std::vector<double>& Ey, const ExternalField& field, double dt);
}  // namespace serial

namespace omp {
void drift(MarkerSpan m, double a);
/// Per-thread buffers merged in thread order; reproducible for a fixed thread count.
void deposit(const MarkerSpan& m, const GridGeometry& g, std::vector<double>& rho);
void kick(MarkerSpan m, const GridGeometry& g, const std::vector<double>& Ex,
          const std::vector<double>& Ey, const ExternalField& field, double dt);
}  // namespace omp

}  // namespace vp25::kernels
