#pragma once

#include <cstddef>
#include <vector>

#include "vp25/core/vec.hpp"

namespace vp25 {

/// Uniform Cartesian node grid. nx, ny count cells, so there are (nx+1)(ny+1)
/// nodes stored row-major (x fastest).
struct Grid2D {
  int nx = 0;
  int ny = 0;
  double h = 0.0;
  Vec2 origin;
  std::vector<double> rho_plus, rho_minus, rho, U, Ex, Ey;

  static Grid2D make(int nx, int ny, double h, Vec2 origin);
  /// Square grid covering [-half_width, half_width]^2 with n cells per axis.
  static Grid2D centered(int n, double half_width);

  int nodes_x() const { return nx + 1; }
  int nodes_y() const { return ny + 1; }
  std::size_t node_count() const {
    return static_cast<std::size_t>(nx + 1) * static_cast<std::size_t>(ny + 1);
  }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(nx + 1) +
           static_cast<std::size_t>(i);
  }
  Vec2 node(int i, int j) const { return {origin.x + i * h, origin.y + j * h}; }
  double cell_area() const { return h * h; }

  /// Throws PreconditionError on h <= 0 or inconsistent array sizes.
  void validate() const;
  void clear_charge();
  /// rho = rho_plus - rho_minus.
  void combine_rho();
  /// Sum of rho * h^2.
  double total_charge() const;
  /// True if x sits in a cell whose corners are all interior nodes.
  bool interior(Vec2 x) const;
  bool same_geometry(const Grid2D& other) const;
};

}  // namespace vp25
