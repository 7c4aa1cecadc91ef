#pragma once

#include <vector>

namespace vp25 {

/// Samples of U0(r) = -4 pi int_0^r (1/s) int_0^s sigma rho0(sigma) dsigma ds on
/// the uniform grid r_i = i * rmax / (n-1), from rho0 samples on the same grid.
/// Composite trapezoid with cumulative sums; U0(0) = 0.
std::vector<double> radial_potential(const std::vector<double>& rho0, double rmax);

/// Enclosed charge M(r_i) = 2 pi int_0^{r_i} s rho0(s) ds (trapezoid).
std::vector<double> enclosed_charge(const std::vector<double>& rho0, double rmax);

}  // namespace vp25
