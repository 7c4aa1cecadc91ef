#pragma once

#include <array>
#include <memory>

#include "vp25/casimir/contdep.hpp"
#include "vp25/casimir/lattice.hpp"
#include "vp25/casimir/stability.hpp"
#include "vp25/fieldsolve/grid.hpp"
#include "vp25/harness/config.hpp"
#include "vp25/kinetic/ensemble.hpp"
#include "vp25/kinetic/simulation.hpp"
#include "vp25/steadystate/assumptions.hpp"
#include "vp25/steadystate/steady_state.hpp"

namespace vp25 {

AnsatzPair build_ansatz(const Config& cfg);
ExternalField build_field(const Config& cfg);
FixedPointOptions build_fixed_point_options(const Config& cfg);
AssumptionOptions build_assumption_options(const Config& cfg);
Grid2D build_grid(const Config& cfg);
std::array<LatticeBox, 2> build_marker_boxes(const Config& cfg);
LatticeSpec build_lattice_spec(const Config& cfg);
StabilityOptions build_stability_options(const Config& cfg);
ContDepOptions build_contdep_options(const Config& cfg);
/// time.dt, or stable_dt with |B|max over the confinement disk.
double build_time_step(const Config& cfg, const ExternalField& field, const Grid2D& grid, double P_estimate);
/// field_pert.delta * compact bump on A_phi (or A_3).
RadialFunction build_field_perturbation(const Config& cfg);

/// amp (1 - s^2)^2 with s^2 = ((r - r_c)/w_r)^2 + |p - p_c|^2 / w_p^2 in the
/// local (p_r, p_phi, p_3) frame. Requires r_c > w_r.
struct PhaseBump {
  double r = 0.2, p_r = 0.0, p_phi = 0.0, p_3 = 0.0;
  double w_r = 0.08, w_p = 0.12;
  double amp = 1.0;

  double operator()(const PhasePoint& z) const;
  /// Exact integral over R^2 x R^3: amp 2 pi r_c w_r w_p^3 pi^2 / 12.
  double mass() const;
};

/// One bump per species with equal mass, so the net charge is unchanged.
struct BumpPair {
  PhaseBump plus, minus;
  double operator()(const PhasePoint& z) const {
    return z.species == Species::plus ? plus(z) : minus(z);
  }
};

/// Plus bump with peak `peak`; the minus amplitude is scaled to equal mass.
BumpPair build_bump_pair(const Config& cfg, double peak);

/// f0 + epsilon g.
PhaseSampler perturbed_datum(std::shared_ptr<const SteadyStateModel> model, BumpPair g, double epsilon);

/// Largest f0 value of the plus species, theta(E_min) * psi amplitude.
double steady_peak(const SteadyStateModel& model);

}  // namespace vp25
