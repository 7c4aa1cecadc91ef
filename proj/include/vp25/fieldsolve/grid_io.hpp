#pragma once

#include <string>

#include "vp25/fieldsolve/grid.hpp"

namespace vp25 {

// Binary snapshot layout (little-endian host order):
//   char[4] "VPG2", uint32 version, int32 nx, int32 ny, f64 h, f64 origin.x, f64 origin.y,
//   then rho_plus, rho_minus, rho, U, Ex, Ey as row-major f64 arrays of (nx+1)(ny+1).
inline constexpr unsigned kGridSnapshotVersion = 1;

void write_snapshot(const std::string& path, const Grid2D& grid);
Grid2D read_snapshot(const std::string& path);

/// Columns x,y,rho,U,Ex,Ey, one row per node.
void write_grid_csv(const std::string& path, const Grid2D& grid);

}  // namespace vp25
