#pragma once

#include <cmath>
#include <cstddef>

#include "vp25/core/vec.hpp"
#include "vp25/fieldsolve/grid.hpp"

namespace vp25 {

struct GridGeometry {
  int nx = 0;
  int ny = 0;
  double h = 0.0;
  Vec2 origin;

  static GridGeometry of(const Grid2D& g) { return {g.nx, g.ny, g.h, g.origin}; }
  std::size_t node_count() const {
    return static_cast<std::size_t>(nx + 1) * static_cast<std::size_t>(ny + 1);
  }
};

/// Bilinear (cloud-in-cell) stencil: base node k00 and fractional offsets.
struct CellStencil {
  std::size_t k00 = 0;
  std::size_t stride = 0;
  double wx = 0.0;
  double wy = 0.0;
};

/// False if x lies outside the cells whose corners avoid the boundary ring.
inline bool interior_stencil(const GridGeometry& g, Vec2 x, CellStencil& s) {
  const double sx = (x.x - g.origin.x) / g.h;
  const double sy = (x.y - g.origin.y) / g.h;
  if (!(sx >= 1.0 && sy >= 1.0 && sx < g.nx - 1.0 && sy < g.ny - 1.0)) return false;
  const int i = static_cast<int>(sx);
  const int j = static_cast<int>(sy);
  s.stride = static_cast<std::size_t>(g.nx + 1);
  s.k00 = static_cast<std::size_t>(j) * s.stride + static_cast<std::size_t>(i);
  s.wx = sx - i;
  s.wy = sy - j;
  return true;
}

inline Vec2 gather(const CellStencil& s, const double* Ex, const double* Ey) {
  const double w00 = (1.0 - s.wx) * (1.0 - s.wy);
  const double w10 = s.wx * (1.0 - s.wy);
  const double w01 = (1.0 - s.wx) * s.wy;
  const double w11 = s.wx * s.wy;
  const std::size_t k = s.k00;
  const std::size_t n = s.stride;
  return {w00 * Ex[k] + w10 * Ex[k + 1] + w01 * Ex[k + n] + w11 * Ex[k + n + 1],
          w00 * Ey[k] + w10 * Ey[k + 1] + w01 * Ey[k + n] + w11 * Ey[k + n + 1]};
}

}  // namespace vp25
