#pragma once

#include <array>
#include <vector>

#include "vp25/kinetic/ensemble.hpp"
#include "vp25/steadystate/ansatz.hpp"
#include "vp25/steadystate/steady_state.hpp"

namespace vp25 {

/// Inverse of theta on [E_min, E_max]. A table over E brackets the root,
/// bisection refines it to 1e-12.
class ThetaInverse {
 public:
  ThetaInverse() = default;
  ThetaInverse(EnergyProfile theta, double E_min, int table_size = 1024);

  /// Throws PreconditionError for s outside [0, theta_max].
  double operator()(double s) const;
  /// int_0^S theta^{-1}(s) ds for S in [0, theta_max].
  double integral(double S) const;

  double theta_max() const { return theta_max_; }
  double E_min() const { return E_min_; }
  double E_max() const { return theta_.E_max; }
  const EnergyProfile& theta() const { return theta_; }

 private:
  EnergyProfile theta_;
  double E_min_ = 0.0;
  double theta_max_ = 0.0;
  std::vector<double> E_table_, s_table_;  // s_table_ decreasing in E
};

/// sup over |x| <= r of |U0|, with the exact logarithmic tail beyond the
/// sampled range.
class XiFunction {
 public:
  XiFunction() = default;
  explicit XiFunction(const RadialSteadyState& state);

  double operator()(double r) const;

 private:
  RadialPotential U_;
  double dr_ = 0.0;
  std::vector<double> prefix_max_;
};

double xi(double r, const RadialSteadyState& state);

/// Smallest sampled radius r0 with min(A_phi(r), r) >= sqrt(2 |U0(r)|) for every
/// sampled r >= r0 (state grid, then a logarithmic scan of the tail up to
/// tail_factor * rmax). Throws Error if the inequality fails at the far end.
double compute_r0(const RadialSteadyState& state, const ExternalField& field,
                  double tail_factor = 1e3);

struct SpeciesCasimir {
  ThetaInverse inverse;
  double E_min = 0.0, E_max = 0.0;
  double theta_max = 0.0;
  double slope_at_min = 0.0;  // theta'(E_min) < 0
  double c_theta = 0.0;       // -1 / inf theta' on [E_min, E_max]
  double c_pm = 0.0;          // bound constant for |Phi| and |d_tau Phi|
};

/// Casimir integrand Phi(tau, sigma, mu) for a theta-pinch steady state.
class CasimirSpec {
 public:
  CasimirSpec() = default;
  /// E_min per species (plus, minus); xi_r0 = xi(r0).
  CasimirSpec(AnsatzPair ansatz, std::array<double, 2> E_min, double r0, double xi_r0);

  double phi(double tau, double sigma, double mu, Species s) const;
  /// d Phi / d tau
  double phi_tau(double tau, double sigma, double mu, Species s) const;
  double psi(double sigma, double mu, Species s) const { return ansatz_[s].psi(sigma, mu, s); }

  const SpeciesCasimir& operator[](Species s) const { return species_[index_of(s)]; }
  const AnsatzPair& ansatz() const { return ansatz_; }
  double r0() const { return r0_; }
  double xi_r0() const { return xi_r0_; }

 private:
  AnsatzPair ansatz_;
  std::array<SpeciesCasimir, 2> species_;
  double r0_ = 0.0;
  double xi_r0_ = 0.0;
};

/// Spec for a converged theta-pinch state: r0 from compute_r0, E_min from the state.
CasimirSpec build_casimir_spec(const SteadyStateModel& model);

/// sum over markers of Phi(f_i, F_i, G_i) vol_i using the initial labels.
/// Throws Error on a non-finite integrand (f outside the admissible set).
double casimir_functional(const MarkerEnsemble& ensemble, const CasimirSpec& spec);

/// Same sum with F, G recomputed at the current marker positions.
double casimir_functional_current(const MarkerEnsemble& ensemble, const CasimirSpec& spec,
                                  const SteadyStateModel& model);

}  // namespace vp25
