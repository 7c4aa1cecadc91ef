#pragma once

#include <memory>
#include <string>
#include <vector>

#include "vp25/harness/builders.hpp"

namespace vp25 {

struct SteadySetup {
  AnsatzPair ansatz;
  ExternalField field;
  CertificateReport certificate;
  std::shared_ptr<const SteadyStateModel> model;
};

/// Certificates plus the fixed point. Throws Error when the iteration did not
/// converge and require_converged is set.
SteadySetup prepare_steady(const Config& cfg, bool require_converged = true);

/// Samples f_init on the marker lattice (labels F, G from the steady state)
/// and runs to time.T under `field`. The Casimir column uses the labels when a
/// spec is given.
std::unique_ptr<Simulation> run_kinetic(const Config& cfg, const SteadySetup& setup, const PhaseSampler& f_init,
                                        const ExternalField& field, bool record_history,
                                        const CasimirSpec* spec = nullptr,
                                        const std::string& snapshot_dir = {});

/// stab.samples equally spaced times on [0, T].
std::vector<double> sample_times(double T, int samples);

/// lhs and sum_s ||f - f0||_2^2 at the stability sample times for f0 carried
/// along the recorded field of an unperturbed run: what the transport error
/// alone contributes.
struct DiscretizationFloor {
  std::vector<double> lhs, l2sq;
};
DiscretizationFloor discretization_floor(const Config& cfg, const SteadySetup& setup, const CasimirSpec& spec,
                                         const PhaseLattice& lattice, const Simulation& baseline);

/// Stability report of a finished perturb-init run. The floor (optional) is
/// added to the right-hand sides of the tolerant pass flags.
StabilityReport evaluate_stability(const Config& cfg, const SteadySetup& setup, const CasimirSpec& spec,
                                   const PhaseLattice& lattice, const PhaseSampler& f_init, const Simulation& sim,
                                   double epsilon, const DiscretizationFloor* floor = nullptr);

struct ExperimentResult {
  std::string directory;
  bool pass = true;
  std::string summary;
};

/// Runs cfg.kind and writes every artifact plus the effective config and a
/// version/tolerance stamp into cfg.out.
ExperimentResult run_experiment(const Config& cfg);

}  // namespace vp25
