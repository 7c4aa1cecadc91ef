#include "vp25/harness/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "vp25/core/error.hpp"

namespace vp25 {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

const char* source_name(ValueSource s) {
  switch (s) {
    case ValueSource::preset:
      return "default";
    case ValueSource::file:
      return "file";
    case ValueSource::flag:
      return "flag";
  }
  return "?";
}

bool parse_double(const std::string& s, double& out) {
  const char* b = s.data();
  const char* e = b + s.size();
  auto [p, ec] = std::from_chars(b, e, out);
  return ec == std::errc() && p == e;
}

}  // namespace

void Config::add(std::string key, std::string value, std::string help, bool positive, bool required) {
  entries_.push_back({std::move(key), std::move(value), std::move(help), ValueSource::preset, required, positive});
}

Config Config::defaults() {
  Config c;
  c.add("kind", "", "experiment: steady | evolve | perturb-init | perturb-field | combined", false, true);
  c.add("out", "", "output directory", false, true);
  c.add("seed", "1", "marker order permutation seed");
  c.add("parallel", "true", "use the OpenMP kernels");

  c.add("pinch", "theta", "field configuration: theta | z");
  c.add("field.a1", "0.5", "A(r) = a1 r + a3 r^3 (A_phi for theta, A_3 for z)");
  c.add("field.a3", "3", "cubic coefficient of A(r)");

  c.add("theta.shape", "smoothed_linear", "linear | smoothed_linear | power");
  c.add("theta.kappa", "2", "slope of theta", true);
  c.add("theta.E_max", "0.125", "cutoff energy", true);
  c.add("theta.delta", "0.01", "C1 smoothing width at the cutoff", true);
  c.add("theta.power", "2", "exponent for the power shape", true);
  c.add("theta.tail", "true", "Gaussian tail below theta.E_lo");
  c.add("theta.E_lo", "-0.125", "start of the tail");
  c.add("theta.tail_width", "0.05", "tail width", true);

  c.add("psi.shape", "signed_bump", "signed_bump | flat");
  c.add("psi.u0", "0.05", "width of the sigma factor", true);
  c.add("psi.amp_plus", "0.45", "amplitude of psi for the plus species");
  c.add("psi.amp_minus", "0.2", "amplitude of psi for the minus species");
  c.add("psi.mu_width", "0.3", "Gaussian width in mu", true);
  c.add("psi.g0_cut", "false", "z pinch: cut psi at G0");
  c.add("psi.G0", "0", "z pinch cutoff G0");
  c.add("psi.g0_width", "0.05", "width of the G0 cutoff", true);

  c.add("steady.rmax", "1.05", "radial extent of the fixed point grid", true);
  c.add("steady.n_r", "301", "radial samples", true);
  c.add("steady.tol", "1e-10", "Picard tolerance on ||U_{n+1} - U_n||_inf", true);
  c.add("steady.max_iter", "200", "Picard iteration cap", true);
  c.add("steady.relaxation", "1", "under-relaxation factor in (0, 1]", true);
  c.add("quad.n_G", "20", "density quadrature nodes in G", true);
  c.add("quad.n_v", "16", "density quadrature nodes per energy interval", true);
  c.add("quad.n_phi", "16", "density quadrature nodes in angle", true);
  c.add("confine.R_tilde", "0.6", "radius from which the confinement inequality is certified", true);
  c.add("confine.R_c", "0.7", "confinement cylinder radius", true);

  c.add("grid.n", "128", "cells per axis", true);
  c.add("grid.half_width", "1.05", "grid covers [-w, w]^2", true);
  c.add("markers.n_x", "40", "position lattice cells per axis", true);
  c.add("markers.x_half", "0.5", "position lattice half width", true);
  c.add("markers.n_p", "12", "momentum lattice cells per axis", true);
  c.add("markers.p_half", "0.6", "momentum lattice half width", true);
  c.add("time.dt", "0", "time step; 0 picks min(0.2/|B|max, 0.25 h/P)");
  c.add("time.T", "5", "final time");
  c.add("time.sample_every", "5", "steps between diagnostics rows", true);
  c.add("snapshot.every", "0", "diagnostics rows between grid snapshots (0 disables)");

  c.add("lattice.r_max", "0.5", "quadrature lattice radius", true);
  c.add("lattice.n_r", "16", "quadrature lattice rings", true);
  c.add("lattice.n_angles", "4", "quadrature lattice angles per ring", true);
  c.add("lattice.p_half", "0.6", "quadrature lattice momentum half width", true);
  c.add("lattice.n_p", "12", "quadrature lattice momentum cells per axis", true);
  c.add("lattice.energy_margin", "0.05", "drop nodes with E >= E_max + margin");

  c.add("pert.epsilon", "0.03", "initial perturbation amplitude (relative to max f0)");
  c.add("pert.r_plus", "0.2", "bump centre radius, plus species", true);
  c.add("pert.pphi_plus", "-0.38", "bump centre p_phi, plus species (sF < 0 side)");
  c.add("pert.r_minus", "0.3", "bump centre radius, minus species", true);
  c.add("pert.pphi_minus", "-0.05", "bump centre p_phi, minus species (sF > 0 side)");
  c.add("pert.w_r", "0.08", "bump radial half width", true);
  c.add("pert.w_p", "0.12", "bump momentum half width", true);
  c.add("field_pert.delta", "0.001", "field perturbation amplitude added to A_phi");
  c.add("field_pert.center", "0.3", "centre of the compact A_phi bump", true);
  c.add("field_pert.width", "0.15", "half width of the compact A_phi bump", true);

  c.add("stab.samples", "6", "stability sample times on [0, T]", true);
  c.add("stab.C", "1.0723649429247001", "log-HLS constant (1 + ln pi)/2", true);
  c.add("stab.psi_floor", "1e-12", "relative psi floor for 1/psi weights", true);
  c.add("stab.charge_tol", "0.02", "relative net-charge tolerance of the perturbation", true);
  c.add("stab.noise_floor", "true", "add the lhs of an unperturbed run as discretization floor");
  c.add("contdep.gamma", "5", "exponent gamma > 4", true);
  c.add("contdep.c", "1", "constant c in the exponential factor", true);
  c.add("contdep.fd_step", "0.02", "momentum finite-difference step", true);
  c.add("contdep.grad_samples", "3", "sample times on [0, T] for the gradient coefficients", true);
  return c;
}

ConfigEntry& Config::at(const std::string& key) {
  auto it = std::find_if(entries_.begin(), entries_.end(), [&](const ConfigEntry& e) { return e.key == key; });
  if (it == entries_.end()) throw ConfigError("unknown config key '" + key + "'");
  return *it;
}

const ConfigEntry& Config::at(const std::string& key) const { return const_cast<Config*>(this)->at(key); }

bool Config::has(const std::string& key) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const ConfigEntry& e) { return e.key == key; });
}

void Config::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  load_text(ss.str(), path);
}

void Config::load_text(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  std::set<std::string> seen;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    if (!seen.insert(key).second) throw ConfigError(origin + ": duplicate key '" + key + "'");
    ConfigEntry& e = at(key);
    e.value = trim(line.substr(eq + 1));
    e.source = ValueSource::file;
  }
}

void Config::set_flag(const std::string& key, const std::string& value) {
  ConfigEntry& e = at(key);
  e.value = value;
  e.source = ValueSource::flag;
}

std::string Config::str(const std::string& key) const { return at(key).value; }

double Config::num(const std::string& key) const {
  double v = 0.0;
  if (!parse_double(at(key).value, v)) throw ConfigError("malformed number for '" + key + "': " + at(key).value);
  return v;
}

int Config::integer(const std::string& key) const {
  const double v = num(key);
  if (v != static_cast<double>(static_cast<long long>(v)))
    throw ConfigError("expected an integer for '" + key + "'");
  return static_cast<int>(v);
}

bool Config::boolean(const std::string& key) const {
  const std::string& v = at(key).value;
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("expected a boolean for '" + key + "': " + v);
}

void Config::validate() const {
  for (const auto& e : entries_) {
    if (e.required && e.value.empty()) throw ConfigError("missing required key '" + e.key + "'");
    if (e.positive && !(num(e.key) > 0.0)) throw ConfigError("'" + e.key + "' must be positive");
  }
  const std::string k = str("kind");
  if (k != "steady" && k != "evolve" && k != "perturb-init" && k != "perturb-field" && k != "combined")
    throw ConfigError("unknown experiment kind '" + k + "'");
  if (num("steady.relaxation") > 1.0) throw ConfigError("'steady.relaxation' must be in (0, 1]");
  if (num("time.T") < 0.0 || num("time.dt") < 0.0) throw ConfigError("time.T and time.dt must be nonnegative");
  if (!(num("contdep.gamma") > 4.0)) throw ConfigError("'contdep.gamma' must exceed 4");
  for (const char* key : {"seed", "snapshot.every"})
    if (num(key) < 0.0) throw ConfigError(std::string("'") + key + "' must be nonnegative");
}

std::string Config::echo() const {
  std::ostringstream o;
  o << "# vp25 " << kVersion << " effective configuration\n";
  for (const auto& e : entries_) o << e.key << " = " << e.value << "  # " << source_name(e.source) << "\n";
  return o.str();
}

}  // namespace vp25
