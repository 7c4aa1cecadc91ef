#include "vp25/steadystate/ansatz.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "vp25/core/error.hpp"

namespace vp25 {

double EnergyProfile::core(double d) const {
  switch (shape) {
    case EnergyShape::linear:
      return kappa * d;
    case EnergyShape::smoothed_linear:
      return d < delta ? kappa * d * d / (2.0 * delta) : kappa * (d - 0.5 * delta);
    case EnergyShape::power:
      return kappa * std::pow(d, power);
  }
  return 0.0;
}

double EnergyProfile::core_slope(double d) const {
  switch (shape) {
    case EnergyShape::linear:
      return kappa;
    case EnergyShape::smoothed_linear:
      return d < delta ? kappa * d / delta : kappa;
    case EnergyShape::power:
      return kappa * power * std::pow(d, power - 1.0);
  }
  return 0.0;
}

double EnergyProfile::core_integral(double d) const {
  switch (shape) {
    case EnergyShape::linear:
      return 0.5 * kappa * d * d;
    case EnergyShape::smoothed_linear:
      if (d < delta) return kappa * d * d * d / (6.0 * delta);
      return kappa * delta * delta / 6.0 + 0.5 * kappa * (d * d - d * delta);
    case EnergyShape::power:
      return kappa * std::pow(d, power + 1.0) / (power + 1.0);
  }
  return 0.0;
}

double EnergyProfile::operator()(double E) const {
  if (E >= E_max) return 0.0;
  if (!tail || E >= E_lo) return core(E_max - E);
  const double u = E_lo - E;
  const double d_lo = E_max - E_lo;
  return (core(d_lo) + core_slope(d_lo) * u) * std::exp(-u * u / (2.0 * tail_width * tail_width));
}

double EnergyProfile::derivative(double E) const {
  if (E >= E_max) return 0.0;
  if (!tail || E >= E_lo) return -core_slope(E_max - E);
  const double u = E_lo - E;
  const double d_lo = E_max - E_lo;
  const double a = core(d_lo);
  const double b = core_slope(d_lo);
  const double w2 = tail_width * tail_width;
  // d/dE = -d/du
  return -(b - (a + b * u) * u / w2) * std::exp(-u * u / (2.0 * w2));
}

double EnergyProfile::integral_above(double E) const {
  if (E >= E_max) return 0.0;
  if (!tail || E >= E_lo) return core_integral(E_max - E);
  const double d_lo = E_max - E_lo;
  const double a = core(d_lo);
  const double b = core_slope(d_lo);
  const double u = E_lo - E;
  const double w = tail_width;
  return core_integral(d_lo) +
         a * w * std::sqrt(0.5 * std::numbers::pi) * std::erf(u / (std::numbers::sqrt2 * w)) +
         b * w * w * (1.0 - std::exp(-u * u / (2.0 * w * w)));
}

double EnergyProfile::l1_norm() const {
  if (!tail) return std::numeric_limits<double>::infinity();
  const double d_lo = E_max - E_lo;
  return core_integral(d_lo) + core(d_lo) * tail_width * std::sqrt(0.5 * std::numbers::pi) +
         core_slope(d_lo) * tail_width * tail_width;
}

std::vector<double> EnergyProfile::kinks() const {
  std::vector<double> k;
  if (tail) k.push_back(E_lo);
  if (shape == EnergyShape::smoothed_linear) k.push_back(E_max - delta);
  return k;
}

void EnergyProfile::validate() const {
  if (!(kappa > 0.0)) throw PreconditionError("EnergyProfile: kappa must be positive");
  if (!(E_max > 0.0)) throw PreconditionError("EnergyProfile: E_max must be positive");
  if (shape == EnergyShape::smoothed_linear && !(delta > 0.0))
    throw PreconditionError("EnergyProfile: smoothing width must be positive");
  if (shape == EnergyShape::power && !(power >= 1.0))
    throw PreconditionError("EnergyProfile: power must be at least 1");
  if (tail && !(E_lo < E_max && tail_width > 0.0))
    throw PreconditionError("EnergyProfile: tail needs E_lo < E_max and a positive width");
}

double PsiProfile::sigma_factor(double sigma, Species s) const {
  if (sigma_shape == SigmaShape::flat) return 1.0;
  const double d = (flip ? 1.0 : -1.0) * charge_sign(s) * sigma;
  if (d <= 0.0) return 0.0;
  return -std::expm1(-d * d / (u0 * u0));
}

double PsiProfile::mu_factor(double mu, Species s) const {
  if (amp == 0.0) return 0.0;
  double m = amp * std::exp(-mu * mu / (2.0 * mu_width * mu_width));
  if (g0_cut) {
    const double d = charge_sign(s) * (G0 - mu);
    if (d <= 0.0) return 0.0;
    m *= -std::expm1(-d * d / (g0_width * g0_width));
  }
  return m;
}

double PsiProfile::majorant(double mu) const {
  return amp * std::exp(-mu * mu / (2.0 * mu_width * mu_width));
}

double PsiProfile::majorant_l1() const {
  return amp * mu_width * std::sqrt(2.0 * std::numbers::pi);
}

}  // namespace vp25
