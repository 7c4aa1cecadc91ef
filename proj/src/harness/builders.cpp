#include "vp25/harness/builders.hpp"

#include <cmath>
#include <numbers>

#include "vp25/core/error.hpp"

namespace vp25 {

namespace {

EnergyShape parse_shape(const std::string& s) {
  if (s == "linear") return EnergyShape::linear;
  if (s == "smoothed_linear") return EnergyShape::smoothed_linear;
  if (s == "power") return EnergyShape::power;
  throw ConfigError("unknown theta.shape '" + s + "'");
}

}  // namespace

AnsatzPair build_ansatz(const Config& cfg) {
  AnsatzPair a;
  const std::string pinch = cfg.str("pinch");
  if (pinch == "theta")
    a.pinch = PinchKind::theta;
  else if (pinch == "z")
    a.pinch = PinchKind::z;
  else
    throw ConfigError("pinch must be theta or z");
  EnergyProfile th;
  th.shape = parse_shape(cfg.str("theta.shape"));
  th.kappa = cfg.num("theta.kappa");
  th.E_max = cfg.num("theta.E_max");
  th.delta = cfg.num("theta.delta");
  th.power = cfg.num("theta.power");
  th.tail = cfg.boolean("theta.tail");
  th.E_lo = cfg.num("theta.E_lo");
  th.tail_width = cfg.num("theta.tail_width");
  th.validate();
  PsiProfile ps;
  const std::string shape = cfg.str("psi.shape");
  if (shape == "signed_bump")
    ps.sigma_shape = SigmaShape::signed_bump;
  else if (shape == "flat")
    ps.sigma_shape = SigmaShape::flat;
  else
    throw ConfigError("unknown psi.shape '" + shape + "'");
  ps.u0 = cfg.num("psi.u0");
  ps.mu_width = cfg.num("psi.mu_width");
  ps.g0_cut = cfg.boolean("psi.g0_cut");
  ps.G0 = cfg.num("psi.G0");
  ps.g0_width = cfg.num("psi.g0_width");
  a.plus = {th, ps};
  a.minus = {th, ps};
  a.plus.psi.amp = cfg.num("psi.amp_plus");
  a.minus.psi.amp = cfg.num("psi.amp_minus");
  if (a.plus.psi.amp < 0.0 || a.minus.psi.amp < 0.0) throw ConfigError("psi amplitudes must be nonnegative");
  return a;
}

ExternalField build_field(const Config& cfg) {
  RadialFunction A = polynomial({0.0, cfg.num("field.a1"), 0.0, cfg.num("field.a3")});
  const std::string pinch = cfg.str("pinch");
  ExternalField f = pinch == "z" ? ExternalField::z_pinch(A) : ExternalField::theta_pinch(A);
  f.validate();
  return f;
}

FixedPointOptions build_fixed_point_options(const Config& cfg) {
  FixedPointOptions o;
  o.rmax = cfg.num("steady.rmax");
  o.n_r = cfg.integer("steady.n_r");
  o.tol = cfg.num("steady.tol");
  o.max_iter = cfg.integer("steady.max_iter");
  o.relaxation = cfg.num("steady.relaxation");
  o.quad = {cfg.integer("quad.n_G"), cfg.integer("quad.n_v"), cfg.integer("quad.n_phi")};
  o.parallel = cfg.boolean("parallel");
  return o;
}

AssumptionOptions build_assumption_options(const Config& cfg) {
  AssumptionOptions o;
  o.R_tilde = cfg.num("confine.R_tilde");
  o.R_c = cfg.num("confine.R_c");
  return o;
}

Grid2D build_grid(const Config& cfg) {
  return Grid2D::centered(cfg.integer("grid.n"), cfg.num("grid.half_width"));
}

std::array<LatticeBox, 2> build_marker_boxes(const Config& cfg) {
  LatticeBox b{cfg.num("markers.x_half"), cfg.integer("markers.n_x"), cfg.num("markers.p_half"),
               cfg.integer("markers.n_p")};
  return {b, b};
}

LatticeSpec build_lattice_spec(const Config& cfg) {
  LatticeSpec s;
  s.r_max = cfg.num("lattice.r_max");
  s.n_r = cfg.integer("lattice.n_r");
  s.n_angles = cfg.integer("lattice.n_angles");
  s.p_half = cfg.num("lattice.p_half");
  s.n_p = cfg.integer("lattice.n_p");
  s.energy_margin = cfg.num("lattice.energy_margin");
  return s;
}

StabilityOptions build_stability_options(const Config& cfg) {
  StabilityOptions o;
  o.C = cfg.num("stab.C");
  o.psi_floor_rel = cfg.num("stab.psi_floor");
  o.charge_tol_rel = cfg.num("stab.charge_tol");
  return o;
}

ContDepOptions build_contdep_options(const Config& cfg) {
  ContDepOptions o;
  o.gamma = cfg.num("contdep.gamma");
  o.c = cfg.num("contdep.c");
  o.fd_step = cfg.num("contdep.fd_step");
  return o;
}

double build_time_step(const Config& cfg, const ExternalField& field, const Grid2D& grid, double P_estimate) {
  const double dt = cfg.num("time.dt");
  if (dt > 0.0) return dt;
  return stable_dt(field.max_abs_B(cfg.num("confine.R_c")), grid.h, P_estimate);
}

RadialFunction build_field_perturbation(const Config& cfg) {
  return compact_bump(cfg.num("field_pert.delta"), cfg.num("field_pert.center"), cfg.num("field_pert.width"));
}

double PhaseBump::operator()(const PhasePoint& z) const {
  const double r = norm(z.x);
  const double dr = (r - this->r) / w_r;
  if (std::abs(dr) >= 1.0 || r == 0.0) return 0.0;
  const double c = z.x.x / r, s = z.x.y / r;
  const double pr = c * z.p.x + s * z.p.y;
  const double pphi = c * z.p.y - s * z.p.x;
  const double dp2 = ((pr - p_r) * (pr - p_r) + (pphi - p_phi) * (pphi - p_phi) + (z.p.z - p_3) * (z.p.z - p_3)) /
                     (w_p * w_p);
  const double s2 = dr * dr + dp2;
  if (s2 >= 1.0) return 0.0;
  return amp * (1.0 - s2) * (1.0 - s2);
}

double PhaseBump::mass() const {
  const double pi = std::numbers::pi;
  return amp * 2.0 * pi * r * w_r * w_p * w_p * w_p * pi * pi / 12.0;
}

BumpPair build_bump_pair(const Config& cfg, double peak) {
  BumpPair g;
  g.plus.r = cfg.num("pert.r_plus");
  g.plus.p_phi = cfg.num("pert.pphi_plus");
  g.minus.r = cfg.num("pert.r_minus");
  g.minus.p_phi = cfg.num("pert.pphi_minus");
  for (PhaseBump* b : {&g.plus, &g.minus}) {
    b->w_r = cfg.num("pert.w_r");
    b->w_p = cfg.num("pert.w_p");
    if (!(b->r > b->w_r)) throw ConfigError("perturbation bumps must stay away from the axis (r > w_r)");
  }
  g.plus.amp = peak;
  g.minus.amp = peak * g.plus.r / g.minus.r;
  return g;
}

PhaseSampler perturbed_datum(std::shared_ptr<const SteadyStateModel> model, BumpPair g, double epsilon) {
  if (epsilon == 0.0) return [model](const PhasePoint& z) { return model->f0(z); };
  return [model, g, epsilon](const PhasePoint& z) { return model->f0(z) + epsilon * g(z); };
}

double steady_peak(const SteadyStateModel& model) {
  const SpeciesAnsatz& a = model.ansatz().plus;
  return a.theta(model.state().E_min_plus) * a.psi.amp;
}

}  // namespace vp25
