#include "vp25/kinetic/simulation.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "vp25/core/error.hpp"
#include "vp25/fieldsolve/energy.hpp"
#include "vp25/fieldsolve/grid_io.hpp"
#include "vp25/kernels/particles.hpp"

namespace vp25 {

double stable_dt(double B_max, double h, double P_estimate) {
  double dt = 0.25 * h / std::max(P_estimate, 1e-12);
  if (B_max > 0.0) dt = std::min(dt, 0.2 / B_max);
  return dt;
}

Simulation::Simulation(MarkerEnsemble ensemble, Grid2D grid, ExternalField field, SimulationOptions options)
    : ens_(std::move(ensemble)), grid_(std::move(grid)), field_(std::move(field)), opt_(std::move(options)) {
  if (!(opt_.dt > 0.0)) throw PreconditionError("Simulation: dt must be positive");
  if (!(opt_.T >= 0.0)) throw PreconditionError("Simulation: T must be nonnegative");
  if (opt_.sample_every < 1) throw PreconditionError("Simulation: sample_every must be positive");
  grid_.validate();
  solver_ = std::make_unique<PoissonSolver>(grid_);
  history_ = FieldHistory(GridGeometry::of(grid_), opt_.dt, field_, ens_.net_charge(),
                          initial_data_hash(ens_));
  update_extrema();
}

void Simulation::deposit_and_solve() {
  const GridGeometry g = GridGeometry::of(grid_);
  grid_.clear_charge();
  for (Species s : kBothSpecies) {
    auto span = ens_[s].span(s);
    auto& rho = s == Species::plus ? grid_.rho_plus : grid_.rho_minus;
    if (opt_.parallel)
      kernels::omp::deposit(span, g, rho);
    else
      kernels::serial::deposit(span, g, rho);
  }
  grid_.combine_rho();
  if (opt_.self_field) {
    solver_->solve(grid_);
  } else {
    std::fill(grid_.U.begin(), grid_.U.end(), 0.0);
    std::fill(grid_.Ex.begin(), grid_.Ex.end(), 0.0);
    std::fill(grid_.Ey.begin(), grid_.Ey.end(), 0.0);
  }
}

void Simulation::update_extrema() {
  const auto e = support_extrema(ens_);
  P_run_ = std::max(P_run_, e[0]);
  X_run_ = std::max(X_run_, e[1]);
}

void Simulation::step() {
  const double dt = opt_.dt;
  for (Species s : kBothSpecies) {
    auto span = ens_[s].span(s);
    opt_.parallel ? kernels::omp::drift(span, 0.5 * dt) : kernels::serial::drift(span, 0.5 * dt);
  }
  deposit_and_solve();
  if (opt_.record_history) history_.push_step(grid_.Ex, grid_.Ey);
  const GridGeometry g = GridGeometry::of(grid_);
  for (Species s : kBothSpecies) {
    auto span = ens_[s].span(s);
    if (opt_.parallel) {
      kernels::omp::kick(span, g, grid_.Ex, grid_.Ey, field_, dt);
      kernels::omp::drift(span, 0.5 * dt);
    } else {
      kernels::serial::kick(span, g, grid_.Ex, grid_.Ey, field_, dt);
      kernels::serial::drift(span, 0.5 * dt);
    }
  }
  ++steps_;
  t_ = static_cast<double>(steps_) * dt;
  update_extrema();
}

DiagnosticsRow Simulation::sample() {
  deposit_and_solve();
  DiagnosticsRow row;
  row.t = t_;
  row.Ekin = kinetic_energy(ens_);
  row.Epot = opt_.self_field ? potential_energy(grid_) : 0.0;
  row.H = row.Ekin + row.Epot;
  row.P = P_run_;
  row.X = X_run_;
  row.M = ens_.net_charge();
  row.l1 = lq_norms(ens_, 1.0);
  row.l2 = lq_norms(ens_, 2.0);
  row.linf = lq_norms(ens_, std::numeric_limits<double>::infinity());
  const double area = grid_.h * grid_.h;
  for (Species s : kBothSpecies) {
    const auto& rho = s == Species::plus ? grid_.rho_plus : grid_.rho_minus;
    double acc = 0.0;
    for (double v : rho) acc += v;
    row.rho_l1[index_of(s)] = acc * area;
  }
  for (const auto& hook : hooks_) hook(*this, row);
  if (!std::isfinite(row.H) || !std::isfinite(row.casimir))
    throw Error("Simulation: non-finite diagnostics at t = " + std::to_string(t_));
  return row;
}

void Simulation::run() {
  const auto total = static_cast<std::size_t>(std::llround(opt_.T / opt_.dt));
  auto record = [&] {
    rows_.push_back(sample());
    if (opt_.snapshot_every > 0 && !opt_.snapshot_dir.empty() &&
        (rows_.size() - 1) % static_cast<std::size_t>(opt_.snapshot_every) == 0) {
      std::filesystem::create_directories(opt_.snapshot_dir);
      char name[64];
      std::snprintf(name, sizeof name, "grid_%06zu.vpg", steps_);
      write_snapshot((std::filesystem::path(opt_.snapshot_dir) / name).string(), grid_);
    }
  };
  if (rows_.empty()) record();
  while (steps_ < total) {
    step();
    if (steps_ % static_cast<std::size_t>(opt_.sample_every) == 0 || steps_ == total) record();
  }
}

}  // namespace vp25
