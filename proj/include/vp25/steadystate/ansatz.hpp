#pragma once

#include <vector>

#include "vp25/core/species.hpp"
#include "vp25/fieldsolve/external_field.hpp"

namespace vp25 {

enum class EnergyShape { linear, smoothed_linear, power };

/// theta(E): zero for E >= E_max, positive and decreasing below. The core
/// shape is written in d = E_max - E:
///   linear           kappa d
///   smoothed_linear  kappa d^2 / (2 delta) for d < delta, kappa (d - delta/2) beyond
///   power            kappa d^k
/// Below E_lo an optional C1 Gaussian tail (a + b u) exp(-u^2 / 2w^2), u = E_lo - E,
/// keeps theta positive and integrable.
struct EnergyProfile {
  EnergyShape shape = EnergyShape::smoothed_linear;
  double kappa = 2.0;
  double E_max = 0.125;
  double delta = 0.01;
  double power = 2.0;
  bool tail = true;
  double E_lo = -0.125;
  double tail_width = 0.05;

  double operator()(double E) const;
  double derivative(double E) const;
  /// int_E^{E_max} theta
  double integral_above(double E) const;
  /// ||theta||_1, infinite without a tail
  double l1_norm() const;
  /// Energies where theta is only C1; quadrature splits there.
  std::vector<double> kinks() const;
  void validate() const;

 private:
  double core(double d) const;
  double core_slope(double d) const;  // d/dd of core
  double core_integral(double d) const;
};

enum class SigmaShape { signed_bump, flat };

/// psi(sigma, mu) = b(d) m(mu) with d = -s sigma (or +s sigma when flipped):
///   signed_bump  b(d) = 1 - exp(-d^2/u0^2) for d > 0, zero otherwise
///   flat         b = 1
/// m(mu) = amp exp(-mu^2 / 2 w^2), optionally times the cutoff c(s (G0 - mu))
/// with c(d) = 1 - exp(-d^2/g0_width^2) for d > 0, zero otherwise.
struct PsiProfile {
  SigmaShape sigma_shape = SigmaShape::signed_bump;
  double u0 = 0.05;
  bool flip = false;
  double amp = 0.45;
  double mu_width = 0.3;
  bool g0_cut = false;
  double G0 = 0.0;
  double g0_width = 0.05;

  double sigma_factor(double sigma, Species s) const;
  double mu_factor(double mu, Species s) const;
  double operator()(double sigma, double mu, Species s) const {
    return sigma_factor(sigma, s) * mu_factor(mu, s);
  }
  /// psi* (mu) >= psi(sigma, mu)
  double majorant(double mu) const;
  double majorant_l1() const;
  /// Effective mu half-range used by quadratures (6 widths).
  double mu_extent() const { return 6.0 * mu_width; }
  bool trivial() const { return amp == 0.0; }
};

struct SpeciesAnsatz {
  EnergyProfile theta;
  PsiProfile psi;

  double eta(double E, double F, double G, Species s) const {
    const double t = theta(E);
    return t == 0.0 ? 0.0 : t * psi(F, G, s);
  }
  /// ||eta_*||_1 = ||theta||_1 ||psi*||_1
  double eta_star_l1() const { return theta.l1_norm() * psi.majorant_l1(); }
};

struct AnsatzPair {
  PinchKind pinch = PinchKind::theta;
  SpeciesAnsatz plus;
  SpeciesAnsatz minus;

  const SpeciesAnsatz& operator[](Species s) const { return s == Species::plus ? plus : minus; }
  SpeciesAnsatz& operator[](Species s) { return s == Species::plus ? plus : minus; }
  bool trivial() const { return plus.psi.trivial() && minus.psi.trivial(); }
};

}  // namespace vp25
