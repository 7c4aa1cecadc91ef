#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "vp25/fieldsolve/external_field.hpp"
#include "vp25/fieldsolve/grid.hpp"
#include "vp25/fieldsolve/poisson.hpp"
#include "vp25/kinetic/diagnostics.hpp"
#include "vp25/kinetic/ensemble.hpp"
#include "vp25/pusher/field_history.hpp"

namespace vp25 {

struct SimulationOptions {
  double dt = 0.04;
  double T = 0.0;
  int sample_every = 1;       // steps between diagnostics rows
  bool self_field = true;     // false: markers feel only the external field
  bool record_history = false;
  bool parallel = true;
  int snapshot_every = 0;     // rows between grid snapshots; 0 disables
  std::string snapshot_dir;
};

/// dt <= min(0.2 / |B|max, 0.25 h / P).
double stable_dt(double B_max, double h, double P_estimate);

/// Marker PIC loop. One step: half drift, deposit, field solve, Boris
/// kick-rotate-kick, half drift. Diagnostics re-deposit at the synchronised
/// positions.
class Simulation {
 public:
  using Hook = std::function<void(const Simulation&, DiagnosticsRow&)>;

  Simulation(MarkerEnsemble ensemble, Grid2D grid, ExternalField field, SimulationOptions options);

  void step();
  /// Advance to options.T, appending a diagnostics row at t = 0 (if none yet)
  /// and every sample_every steps.
  void run();
  DiagnosticsRow sample();

  void add_hook(Hook hook) { hooks_.push_back(std::move(hook)); }

  double time() const { return t_; }
  std::size_t steps_taken() const { return steps_; }
  const MarkerEnsemble& ensemble() const { return ens_; }
  const Grid2D& grid() const { return grid_; }
  const ExternalField& field() const { return field_; }
  const SimulationOptions& options() const { return opt_; }
  const FieldHistory& history() const { return history_; }
  const std::vector<DiagnosticsRow>& diagnostics() const { return rows_; }
  double running_P() const { return P_run_; }
  double running_X() const { return X_run_; }

 private:
  void deposit_and_solve();
  void update_extrema();

  MarkerEnsemble ens_;
  Grid2D grid_;
  ExternalField field_;
  SimulationOptions opt_;
  std::unique_ptr<PoissonSolver> solver_;
  FieldHistory history_;
  std::vector<DiagnosticsRow> rows_;
  std::vector<Hook> hooks_;
  double t_ = 0.0;
  std::size_t steps_ = 0;
  double P_run_ = 0.0, X_run_ = 0.0;
};

}  // namespace vp25
