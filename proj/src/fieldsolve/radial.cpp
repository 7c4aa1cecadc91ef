#include "vp25/fieldsolve/radial.hpp"

#include <cmath>
#include <numbers>

#include "vp25/core/error.hpp"

namespace vp25 {

namespace {

void check_inputs(const std::vector<double>& rho0, double rmax) {
  if (!(rmax > 0.0)) throw PreconditionError("radial_potential: rmax must be positive");
  if (rho0.size() < 2) throw PreconditionError("radial_potential: need at least two samples");
  for (double v : rho0)
    if (!std::isfinite(v)) throw PreconditionError("radial_potential: non-finite density sample");
}

}  // namespace

std::vector<double> enclosed_charge(const std::vector<double>& rho0, double rmax) {
  check_inputs(rho0, rmax);
  const std::size_t n = rho0.size();
  const double dr = rmax / static_cast<double>(n - 1);
  std::vector<double> M(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) {
    const double a = (i - 1) * dr * rho0[i - 1];
    const double b = i * dr * rho0[i];
    M[i] = M[i - 1] + std::numbers::pi * dr * (a + b);
  }
  return M;
}

std::vector<double> radial_potential(const std::vector<double>& rho0, double rmax) {
  const std::vector<double> M = enclosed_charge(rho0, rmax);
  const std::size_t n = rho0.size();
  const double dr = rmax / static_cast<double>(n - 1);
  // U0' = -2 M(r)/r, with the limit -2 pi rho0(0) r -> 0 at the axis.
  std::vector<double> slope(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) slope[i] = -2.0 * M[i] / (i * dr);
  std::vector<double> U(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) U[i] = U[i - 1] + 0.5 * dr * (slope[i - 1] + slope[i]);
  return U;
}

}  // namespace vp25
