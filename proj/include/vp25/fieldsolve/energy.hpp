#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "vp25/fieldsolve/grid.hpp"
#include "vp25/fieldsolve/poisson.hpp"

namespace vp25 {

/// Sharp constant of the logarithmic HLS inequality (Carlen-Loss), used as
/// the default C.
inline const double kLogHlsConstant = 0.5 * (1.0 + std::log(std::numbers::pi));

/// 1/2 sum U rho h^2; requires U already solved for the grid's rho.
double potential_energy(const Grid2D& grid);

/// -double-integral ln|x-y| a(y) b(x) on the solver's grid. Symmetric in a, b.
double interaction_energy(const PoissonSolver& solver, const std::vector<double>& a,
                          const std::vector<double>& b);

/// RHS - LHS of the log-HLS bound for a nonnegative density on the grid
/// (reads grid.rho). Throws PreconditionError on negative values and
/// DegenerateInput on zero mass.
double log_hls_gap(const Grid2D& density, double C = kLogHlsConstant);

/// -double-integral ln|x-y| rho rho for a zero-charge density (reads grid.rho).
/// Throws PreconditionError when |total charge| > tol_rel * ||rho||_1.
double quadratic_form_sign(const Grid2D& density, double tol_rel = 1e-10);

}  // namespace vp25
