#pragma once

#include <array>
#include <functional>
#include <vector>

#include "vp25/core/radial_profile.hpp"
#include "vp25/fieldsolve/external_field.hpp"
#include "vp25/pusher/pusher.hpp"
#include "vp25/steadystate/ansatz.hpp"

namespace vp25 {

/// Gauss-Legendre node counts for the reduced (G, v, phi) integral; the v
/// integral is split at the energy kinks of theta and at the onset of the
/// sigma factor.
struct DensityQuadrature {
  int n_G = 20;
  int n_v = 16;
  int n_phi = 16;
};

/// (rho0+(r), rho0-(r)) for the given local value of U0.
std::array<double, 2> density_from_potential(double U0, double r, const AnsatzPair& ansatz,
                                             const ExternalField& field,
                                             const DensityQuadrature& quad = {});

struct FixedPointOptions {
  double rmax = 1.05;
  int n_r = 301;
  double tol = 1e-10;
  int max_iter = 200;
  double relaxation = 1.0;  // omega in (0, 1]
  DensityQuadrature quad;
  bool parallel = true;
};

struct RadialSteadyState {
  double rmax = 0.0;
  std::vector<double> r, U0, rho_plus, rho_minus;
  double R_plus = 0.0, R_minus = 0.0, R = 0.0;
  double E_min_plus = 0.0, E_min_minus = 0.0;
  double M = 0.0;
  int iterations = 0;
  double increment = 0.0;  // last ||U_{n+1} - U_n||_inf
  double residual = 0.0;   // ||U(rho(U0)) - U0||_inf for the returned U0
  bool converged = false;
  double scan_resolution = 0.0;

  double E_min(Species s) const { return s == Species::plus ? E_min_plus : E_min_minus; }
  double support(Species s) const { return s == Species::plus ? R_plus : R_minus; }
  const std::vector<double>& rho(Species s) const {
    return s == Species::plus ? rho_plus : rho_minus;
  }
  RadialPotential potential() const;
};

/// Picard iteration U -> rho(U) -> U from U = 0. Not converging within
/// max_iter is reported through `converged`, never thrown.
RadialSteadyState fixed_point_solve(const AnsatzPair& ansatz, const ExternalField& field,
                                    const FixedPointOptions& options);

/// Radius of the last nonzero sample's successor on a uniform grid (0 if none).
double support_radius(const std::vector<double>& samples, double rmax);

/// Support radius of a phase-space function by radial scan: nonzero(r) reports
/// whether any probe at radius r is nonzero. Returns the smallest scanned radius
/// beyond which all probes vanish. Throws Error if the last scanned radius is
/// still nonzero.
double support_radius(const std::function<bool(double)>& nonzero, double rmax, int samples);

/// f0 evaluation for a converged state (U0 spline-interpolated in r).
class SteadyStateModel {
 public:
  SteadyStateModel(RadialSteadyState state, AnsatzPair ansatz, ExternalField field);

  double f0(const PhasePoint& z) const;
  InvariantTriple invariants(const PhasePoint& z) const;
  double psi(double F, double G, Species s) const { return ansatz_[s].psi(F, G, s); }

  const RadialSteadyState& state() const { return state_; }
  const AnsatzPair& ansatz() const { return ansatz_; }
  const ExternalField& field() const { return field_; }
  const RadialPotential& potential() const { return potential_; }

 private:
  RadialSteadyState state_;
  AnsatzPair ansatz_;
  ExternalField field_;
  RadialPotential potential_;
};

double sample_f0(Vec2 x, Vec3 p, Species s, const RadialSteadyState& state, const AnsatzPair& ansatz,
                 const ExternalField& field);

}  // namespace vp25
