#include "vp25/harness/experiment.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "vp25/core/error.hpp"
#include "vp25/steadystate/steady_io.hpp"

namespace vp25 {

namespace fs = std::filesystem;

namespace {

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

std::map<std::string, std::string> steady_metadata(const Config& cfg) {
  std::map<std::string, std::string> m;
  for (const auto& e : cfg.entries())
    if (e.key.rfind("theta.", 0) == 0 || e.key.rfind("psi.", 0) == 0 || e.key.rfind("field.", 0) == 0 ||
        e.key == "pinch")
      m[e.key] = e.value;
  return m;
}

std::string tolerance_stamp(const Config& cfg, const SteadySetup* setup) {
  std::ostringstream o;
  o.precision(10);
  o << "version " << kVersion << "\n";
  o << "steady.tol " << cfg.num("steady.tol") << "\n";
  if (setup) {
    const RadialSteadyState& st = setup->model->state();
    o << "steady.achieved_increment " << st.increment << "\n";
    o << "steady.residual " << st.residual << "\n";
    o << "steady.iterations " << st.iterations << "\n";
    o << "steady.support_scan_resolution " << st.scan_resolution << "\n";
  }
  o << "theta_inverse.root_tol 1e-13\n";
  o << "stab.psi_floor " << cfg.num("stab.psi_floor") << "\n";
  o << "stab.charge_tol " << cfg.num("stab.charge_tol") << "\n";
  o << "stab.C " << cfg.num("stab.C") << "\n";
  o << "contdep.fd_step " << cfg.num("contdep.fd_step") << "\n";
  o << "quadratic_form.zero_charge_tol 1e-10\n";
  return o.str();
}

/// Equal steps of at most the stable size that land exactly on T.
double fitted_step(double dt_max, double T) {
  if (T <= 0.0) return dt_max;
  return T / std::ceil(T / dt_max - 1e-9);
}

}  // namespace

SteadySetup prepare_steady(const Config& cfg, bool require_converged) {
  SteadySetup s;
  s.ansatz = build_ansatz(cfg);
  s.field = build_field(cfg);
  const FixedPointOptions fp = build_fixed_point_options(cfg);
  RadialSteadyState st = fixed_point_solve(s.ansatz, s.field, fp);
  if (require_converged && !st.converged)
    throw Error("fixed point did not converge (increment " + std::to_string(st.increment) + ")");
  AssumptionOptions ao = build_assumption_options(cfg);
  ao.E_min_plus = st.E_min_plus;
  ao.E_min_minus = st.E_min_minus;
  s.certificate = check_assumptions(s.ansatz, s.field, ao);
  s.model = std::make_shared<const SteadyStateModel>(std::move(st), s.ansatz, s.field);
  return s;
}

std::unique_ptr<Simulation> run_kinetic(const Config& cfg, const SteadySetup& setup, const PhaseSampler& f_init,
                                        const ExternalField& field, bool record_history, const CasimirSpec* spec,
                                        const std::string& snapshot_dir) {
  auto model = setup.model;
  LabelFn labels = [model](const PhasePoint& z) { return model->invariants(z); };
  MarkerEnsemble ens = init_ensemble(f_init, build_marker_boxes(cfg), static_cast<std::uint64_t>(cfg.integer("seed")),
                                     labels, !setup.ansatz.trivial());
  Grid2D grid = build_grid(cfg);
  SimulationOptions so;
  so.T = cfg.num("time.T");
  so.dt = fitted_step(build_time_step(cfg, field, grid, std::max(support_extrema(ens)[0], 0.1)), so.T);
  so.sample_every = cfg.integer("time.sample_every");
  so.record_history = record_history;
  so.parallel = cfg.boolean("parallel");
  so.snapshot_every = cfg.integer("snapshot.every");
  so.snapshot_dir = snapshot_dir;
  auto sim = std::make_unique<Simulation>(std::move(ens), std::move(grid), field, so);
  if (spec) {
    const CasimirSpec sp = *spec;
    sim->add_hook([sp, model](const Simulation& s, DiagnosticsRow& row) {
      row.casimir = casimir_functional(s.ensemble(), sp);
      row.extra["Casimir_current"] = casimir_functional_current(s.ensemble(), sp, *model);
    });
  }
  sim->run();
  return sim;
}

std::vector<double> sample_times(double T, int samples) {
  if (samples < 1) throw PreconditionError("sample_times: need at least one sample");
  std::vector<double> t;
  if (samples == 1 || T == 0.0) return {T};
  for (int k = 0; k < samples; ++k) t.push_back(T * k / (samples - 1));
  return t;
}

DiscretizationFloor discretization_floor(const Config& cfg, const SteadySetup& setup, const CasimirSpec& spec,
                                         const PhaseLattice& lattice, const Simulation& baseline) {
  const StabilityOptions so = build_stability_options(cfg);
  const bool par = cfg.boolean("parallel");
  const auto model = setup.model;
  const PhaseSampler f0 = [model](const PhasePoint& z) { return model->f0(z); };
  DiscretizationFloor out;
  for (double t : sample_times(baseline.time(), cfg.integer("stab.samples"))) {
    const LatticeValues f = t == 0.0 ? lattice.steady_values() : lattice.evaluate_backward(f0, baseline.history(), t, par);
    out.lhs.push_back(stability_lhs(f, lattice, spec, so));
    out.l2sq.push_back(l2_distance_sq(f, lattice));
  }
  return out;
}

StabilityReport evaluate_stability(const Config& cfg, const SteadySetup& setup, const CasimirSpec& spec,
                                   const PhaseLattice& lattice, const PhaseSampler& f_init, const Simulation& sim,
                                   double epsilon, const DiscretizationFloor* floor) {
  const StabilityOptions so = build_stability_options(cfg);
  const bool par = cfg.boolean("parallel");
  const RadialSteadyState& st = setup.model->state();
  StabilityReport rep;
  rep.epsilon = epsilon;
  const LatticeValues f_init_vals = lattice.evaluate(f_init, par);
  rep.rhs = stability_rhs(f_init_vals, lattice, spec, XiFunction(st), st.R, so);
  rep.hc_gap = energy_casimir_gap(f_init_vals, lattice, spec);
  rep.remark_constant = remark_constant(spec);
  const RegionNorms labels = region_norms_labels(sim.ensemble());
  double l2_pos0 = 0.0;
  for (int s = 0; s < 2; ++s) l2_pos0 += labels.l2[s] * labels.l2[s];
  const double rhs = rep.rhs.total();
  const double bound = rep.remark_constant * rep.rhs.braces() + l2_pos0;
  const std::vector<double> times = sample_times(sim.time(), cfg.integer("stab.samples"));
  for (std::size_t k = 0; k < times.size(); ++k) {
    const double t = times[k];
    const LatticeValues f = t == 0.0 ? f_init_vals : lattice.evaluate_backward(f_init, sim.history(), t, par);
    StabilityRow row;
    row.t = t;
    row.lhs = stability_lhs(f, lattice, spec, so);
    row.rhs = rhs;
    if (floor && k < floor->lhs.size()) {
      row.floor = floor->lhs[k];
      row.remark_floor = floor->l2sq[k];
    }
    row.pass_strict = row.lhs <= rhs;
    row.pass = row.lhs <= rhs + row.floor;
    // labels are fixed at t = 0, so these equal their initial values by construction
    row.labels = labels;
    row.lattice = region_norms_lattice(f, lattice);
    row.l2sq = l2_distance_sq(f, lattice);
    row.remark_bound = bound;
    row.remark_pass = row.l2sq <= bound + row.remark_floor;
    rep.rows.push_back(row);
  }
  return rep;
}

namespace {

struct Outputs {
  fs::path dir;
  bool pass = true;
  std::ostringstream summary;
};

void write_certificate(const Outputs& o, const SteadySetup& s) {
  write_text(o.dir / "certificate.txt", s.certificate.to_text());
}

void kind_steady(const Config& cfg, Outputs& o, const SteadySetup& s) {
  const RadialSteadyState& st = s.model->state();
  write_steady_csv((o.dir / "steady_state.csv").string(), st, steady_metadata(cfg));
  write_certificate(o, s);
  o.pass = st.converged && s.certificate.all_pass();
  o.summary << "steady: converged " << (st.converged ? "yes" : "no") << " after " << st.iterations
            << " iterations, increment " << st.increment << ", R " << st.R << ", M " << st.M
            << ", certificates " << (s.certificate.all_pass() ? "pass" : "FAIL") << "\n";
}

std::unique_ptr<CasimirSpec> maybe_spec(const SteadySetup& s) {
  if (s.field.kind() != PinchKind::theta || s.ansatz.trivial()) return nullptr;
  return std::make_unique<CasimirSpec>(build_casimir_spec(*s.model));
}

void kind_evolve(const Config& cfg, Outputs& o, const SteadySetup& s) {
  auto spec = maybe_spec(s);
  const double eps = cfg.num("pert.epsilon");
  const PhaseSampler f_init = perturbed_datum(s.model, build_bump_pair(cfg, steady_peak(*s.model)), eps);
  auto sim = run_kinetic(cfg, s, f_init, s.field, false, spec.get(), (o.dir / "snapshots").string());
  write_diagnostics_csv((o.dir / "diagnostics.csv").string(), sim->diagnostics());
  const auto& rows = sim->diagnostics();
  const double H0 = rows.front().H;
  double drift = 0.0;
  for (const auto& r : rows) drift = std::max(drift, std::abs(r.H - H0) / std::abs(H0));
  const std::size_t n_markers = sim->ensemble()[Species::plus].size() + sim->ensemble()[Species::minus].size();
  o.summary << "evolve: " << n_markers << " markers, " << rows.size() << " rows, dt " << sim->options().dt << ", max relative energy drift "
            << drift << ", P(T) " << rows.back().P << "\n";
}

// Floor from an unperturbed run under A0; at epsilon = 0 the run itself is that run.
std::optional<DiscretizationFloor> maybe_floor(const Config& cfg, const SteadySetup& s, const CasimirSpec& spec,
                                               const PhaseLattice& lattice, double eps, const Simulation& sim) {
  if (!cfg.boolean("stab.noise_floor")) return std::nullopt;
  if (eps == 0.0) return discretization_floor(cfg, s, spec, lattice, sim);
  const auto model = s.model;
  const PhaseSampler f0 = [model](const PhasePoint& z) { return model->f0(z); };
  const auto base = run_kinetic(cfg, s, f0, s.field, true, &spec);
  return discretization_floor(cfg, s, spec, lattice, *base);
}

void kind_perturb_init(const Config& cfg, Outputs& o, const SteadySetup& s) {
  auto spec = maybe_spec(s);
  if (!spec) throw PreconditionError("perturb-init needs a nontrivial theta-pinch steady state");
  const double eps = cfg.num("pert.epsilon");
  const PhaseSampler f_init = perturbed_datum(s.model, build_bump_pair(cfg, steady_peak(*s.model)), eps);
  auto sim = run_kinetic(cfg, s, f_init, s.field, true, spec.get());
  write_diagnostics_csv((o.dir / "diagnostics.csv").string(), sim->diagnostics());
  const PhaseLattice lattice(build_lattice_spec(cfg), *s.model);
  const auto floor = maybe_floor(cfg, s, *spec, lattice, eps, *sim);
  const StabilityReport rep =
      evaluate_stability(cfg, s, *spec, lattice, f_init, *sim, eps, floor ? &*floor : nullptr);
  rep.write_csv((o.dir / "stability.csv").string());
  write_text(o.dir / "stability_summary.txt", rep.summary());
  o.pass = rep.pass() && rep.remark_pass();
  o.summary << "perturb-init:\n" << rep.summary();
}

struct PairedRuns {
  std::unique_ptr<Simulation> run1, run2;  // run1 under the perturbed field, run2 under A0
  ExternalField perturbed;
  double dB_L2 = 0.0;
};

PairedRuns paired_runs(const Config& cfg, const SteadySetup& s, const PhaseSampler& f_init, const CasimirSpec* spec) {
  PairedRuns p;
  p.perturbed = s.field.perturbed(build_field_perturbation(cfg));
  p.run1 = run_kinetic(cfg, s, f_init, p.perturbed, true, spec);
  p.run2 = run_kinetic(cfg, s, f_init, s.field, true, spec);
  const double r_out = cfg.num("field_pert.center") + cfg.num("field_pert.width") + 0.05;
  p.dB_L2 = field_difference_L2(p.perturbed, s.field, r_out);
  return p;
}

std::vector<ContDepPoint> contdep_series(const Config& cfg, const PhaseLattice& lattice, const PhaseSampler& f_init,
                                         const PairedRuns& runs) {
  const ContDepOptions co = build_contdep_options(cfg);
  const double q = q_from_gamma(co.gamma);
  const bool par = cfg.boolean("parallel");
  const double T = runs.run2->time();
  const std::vector<double> grad_t = sample_times(T, cfg.integer("contdep.grad_samples"));
  std::vector<GradientNorms> running;
  GradientNorms ab;
  for (double s : grad_t) {
    ab.merge(gradient_norms(lattice, f_init, &runs.run2->history(), s, q, co.fd_step, par));
    running.push_back(ab);
  }
  std::vector<ContDepPoint> pts;
  for (double t : sample_times(T, cfg.integer("stab.samples"))) {
    // coefficients up to the latest gradient sample not after t, and at least the t = 0 one
    GradientNorms use = running.front();
    for (std::size_t k = 0; k < grad_t.size(); ++k)
      if (grad_t[k] <= t + 1e-12) use = running[k];
    pts.push_back(contdep_bound(runs.run1->history(), runs.run2->history(), f_init, lattice, t, use, runs.dB_L2,
                                co, par));
  }
  return pts;
}

void kind_perturb_field(const Config& cfg, Outputs& o, const SteadySetup& s) {
  auto spec = maybe_spec(s);
  const PhaseSampler f_init = perturbed_datum(s.model, {}, 0.0);
  const PairedRuns runs = paired_runs(cfg, s, f_init, spec.get());
  write_diagnostics_csv((o.dir / "diagnostics_run1.csv").string(), runs.run1->diagnostics());
  write_diagnostics_csv((o.dir / "diagnostics_run2.csv").string(), runs.run2->diagnostics());
  const PhaseLattice lattice(build_lattice_spec(cfg), *s.model);
  const auto pts = contdep_series(cfg, lattice, f_init, runs);
  write_contdep_csv((o.dir / "contdep.csv").string(), pts);
  bool ok = true;
  for (const auto& p : pts) ok = ok && p.pass;
  o.pass = ok;
  o.summary << "perturb-field: ||dB||_L2 " << runs.dB_L2 << ", final lhs " << pts.back().lhs << ", ln rhs "
            << pts.back().log_rhs << ", empirical ratio " << pts.back().ratio << ", pass " << (ok ? "yes" : "no")
            << "\n";
}

void kind_combined(const Config& cfg, Outputs& o, const SteadySetup& s) {
  auto spec = maybe_spec(s);
  if (!spec) throw PreconditionError("combined needs a nontrivial theta-pinch steady state");
  const double eps = cfg.num("pert.epsilon");
  const PhaseSampler f_init = perturbed_datum(s.model, build_bump_pair(cfg, steady_peak(*s.model)), eps);
  const PairedRuns runs = paired_runs(cfg, s, f_init, spec.get());
  const PhaseLattice lattice(build_lattice_spec(cfg), *s.model);
  const auto floor = maybe_floor(cfg, s, *spec, lattice, eps, *runs.run2);
  const StabilityReport rep =
      evaluate_stability(cfg, s, *spec, lattice, f_init, *runs.run2, eps, floor ? &*floor : nullptr);
  const auto cd = contdep_series(cfg, lattice, f_init, runs);
  const LatticeValues f0 = lattice.steady_values();
  const double remark = std::sqrt(2.0 * rep.rows.front().remark_bound);
  std::ofstream out(o.dir / "combined.csv");
  out.precision(17);
  out << "t,lhs,part_field,part_initial,remark_sqrt,contdep_rhs,bound,pass\n";
  bool ok = true;
  const bool par = cfg.boolean("parallel");
  for (std::size_t k = 0; k < cd.size(); ++k) {
    const double t = cd[k].t;
    const LatticeValues f = lattice.evaluate_backward(f_init, runs.run1->history(), t, par);
    const LatticeValues fs = lattice.evaluate_backward(f_init, runs.run2->history(), t, par);
    const double lhs = lattice_l2_difference(f, f0, lattice);
    const double part_init = lattice_l2_difference(fs, f0, lattice);
    const double bound = remark + cd[k].rhs;
    const bool pass = lhs <= bound;
    ok = ok && pass;
    out << t << "," << lhs << "," << cd[k].lhs << "," << part_init << "," << remark << "," << cd[k].rhs << ","
        << bound << "," << (pass ? 1 : 0) << "\n";
  }
  o.pass = ok && rep.pass();
  o.summary << "combined: decomposition written to combined.csv, pass " << (o.pass ? "yes" : "no") << "\n";
}

}  // namespace

ExperimentResult run_experiment(const Config& cfg) {
  cfg.validate();
  Outputs o;
  o.dir = cfg.str("out");
  fs::create_directories(o.dir);
  write_text(o.dir / "config.txt", cfg.echo());
  const std::string kind = cfg.str("kind");
  SteadySetup setup;
  try {
    setup = prepare_steady(cfg, kind != "steady");
  } catch (const Error& e) {
    throw Error(std::string("steady state: ") + e.what());
  }
  write_text(o.dir / "version.txt", tolerance_stamp(cfg, &setup));
  try {
    if (kind == "steady")
      kind_steady(cfg, o, setup);
    else if (kind == "evolve")
      kind_evolve(cfg, o, setup);
    else if (kind == "perturb-init")
      kind_perturb_init(cfg, o, setup);
    else if (kind == "perturb-field")
      kind_perturb_field(cfg, o, setup);
    else
      kind_combined(cfg, o, setup);
  } catch (const Error& e) {
    throw Error(kind + ": " + e.what());
  }
  write_text(o.dir / "summary.txt", o.summary.str());
  return {o.dir.string(), o.pass, o.summary.str()};
}

}  // namespace vp25
