#pragma once

#include <memory>
#include <vector>

#include "vp25/fieldsolve/grid.hpp"

namespace vp25 {

/// Mean of ln|x| over an axis-aligned square of side h centred at the origin.
double self_cell_log_average(double h);

/// Free-space solver for U = -2 ln|.| * rho and E = -grad U on a node grid.
/// Both are zero-padded FFT convolutions with tabulated kernels; the U kernel
/// uses the cell average of the logarithm at zero offset and the gradient
/// kernel is zero there. Plans and kernel transforms are built once.
class PoissonSolver {
 public:
  PoissonSolver(int nx, int ny, double h);
  explicit PoissonSolver(const Grid2D& geometry) : PoissonSolver(geometry.nx, geometry.ny, geometry.h) {}
  ~PoissonSolver();
  PoissonSolver(const PoissonSolver&) = delete;
  PoissonSolver& operator=(const PoissonSolver&) = delete;

  /// Fills U, Ex, Ey from rho. Throws DomainTooSmall when rho is nonzero on
  /// the outer node ring, PreconditionError on a geometry mismatch.
  void solve(Grid2D& grid) const;
  /// Potential only, for an arbitrary density array of the solver's shape.
  void potential(const std::vector<double>& rho, std::vector<double>& U) const;

  int nx() const;
  int ny() const;
  double h() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Throws DomainTooSmall if rho is nonzero on the boundary node ring.
void check_support(const Grid2D& grid);

/// Convenience wrappers building a solver per call.
void solve_potential(Grid2D& grid);
void solve_field(Grid2D& grid);

}  // namespace vp25
