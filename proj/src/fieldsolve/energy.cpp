#include "vp25/fieldsolve/energy.hpp"

#include <cmath>

#include "vp25/core/error.hpp"

namespace vp25 {

double potential_energy(const Grid2D& g) {
  g.validate();
  double s = 0.0;
  for (std::size_t k = 0; k < g.rho.size(); ++k) s += g.U[k] * g.rho[k];
  return 0.5 * s * g.h * g.h;
}

double interaction_energy(const PoissonSolver& solver, const std::vector<double>& a,
                          const std::vector<double>& b) {
  std::vector<double> Ua;
  solver.potential(a, Ua);
  if (b.size() != Ua.size()) throw PreconditionError("interaction_energy: size mismatch");
  double s = 0.0;
  for (std::size_t k = 0; k < b.size(); ++k) s += Ua[k] * b[k];
  const double h = solver.h();
  return 0.5 * s * h * h;
}

double log_hls_gap(const Grid2D& g, double C) {
  g.validate();
  check_support(g);
  const double area = g.h * g.h;
  double mass = 0.0;
  for (double v : g.rho) {
    if (v < 0.0) throw PreconditionError("log_hls_gap: density must be nonnegative");
    mass += v * area;
  }
  if (!(mass > 0.0)) throw DegenerateInput("log_hls_gap: zero total mass");
  double entropy = 0.0;
  for (double v : g.rho)
    if (v > 0.0) entropy += v * std::log(v / mass) * area;
  PoissonSolver solver(g);
  const double lhs = interaction_energy(solver, g.rho, g.rho);
  return 0.5 * mass * entropy + C * mass * mass - lhs;
}

double quadratic_form_sign(const Grid2D& g, double tol_rel) {
  g.validate();
  check_support(g);
  double total = 0.0;
  double l1 = 0.0;
  for (double v : g.rho) {
    total += v;
    l1 += std::abs(v);
  }
  if (std::abs(total) > tol_rel * l1)
    throw PreconditionError("quadratic_form_sign: density must carry zero total charge");
  if (l1 == 0.0) return 0.0;
  PoissonSolver solver(g);
  return interaction_energy(solver, g.rho, g.rho);
}

}  // namespace vp25
