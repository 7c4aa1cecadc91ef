#include "vp25/casimir/casimir_spec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vp25/core/error.hpp"

namespace vp25 {

ThetaInverse::ThetaInverse(EnergyProfile theta, double E_min, int table_size)
    : theta_(std::move(theta)), E_min_(E_min) {
  if (!(E_min < theta_.E_max)) throw PreconditionError("ThetaInverse: E_min must be below E_max");
  if (table_size < 2) throw PreconditionError("ThetaInverse: table too small");
  theta_max_ = theta_(E_min);
  E_table_.resize(static_cast<std::size_t>(table_size) + 1);
  s_table_.resize(E_table_.size());
  const double dE = (theta_.E_max - E_min) / table_size;
  for (std::size_t k = 0; k < E_table_.size(); ++k) {
    E_table_[k] = k + 1 == E_table_.size() ? theta_.E_max : E_min + static_cast<double>(k) * dE;
    s_table_[k] = theta_(E_table_[k]);
  }
  for (std::size_t k = 1; k < s_table_.size(); ++k)
    if (!(s_table_[k] < s_table_[k - 1]))
      throw PreconditionError("ThetaInverse: theta is not strictly decreasing on [E_min, E_max]");
}

double ThetaInverse::operator()(double s) const {
  if (E_table_.empty()) throw PreconditionError("ThetaInverse: not initialised");
  if (!(s >= 0.0 && s <= theta_max_)) throw PreconditionError("ThetaInverse: value outside [0, theta_max]");
  if (s == 0.0) return theta_.E_max;
  if (s == theta_max_) return E_min_;
  // first table entry with s_table_ < s; the root lies in [E_{k-1}, E_k]
  auto it = std::upper_bound(s_table_.begin(), s_table_.end(), s, std::greater<double>());
  const auto k = static_cast<std::size_t>(it - s_table_.begin());
  // Illinois false position on the bracketing table cell
  double lo = E_table_[k - 1], hi = E_table_[k];
  double flo = s_table_[k - 1] - s, fhi = s_table_[k] - s;
  int side = 0;
  double e = lo;
  for (int it = 0; it < 100; ++it) {
    e = (lo * fhi - hi * flo) / (fhi - flo);
    const double fe = theta_(e) - s;
    if (fe == 0.0 || hi - lo < 1e-13 * std::max(1.0, std::abs(lo))) break;
    if (fe > 0.0) {
      lo = e;
      flo = fe;
      if (side == -1) fhi *= 0.5;
      side = -1;
    } else {
      hi = e;
      fhi = fe;
      if (side == 1) flo *= 0.5;
      side = 1;
    }
    if (std::abs(fe) <= 1e-15 * std::max(1.0, s)) break;
  }
  return e;
}

double ThetaInverse::integral(double S) const {
  const double e = (*this)(S);
  return e * S + theta_.integral_above(e);
}

XiFunction::XiFunction(const RadialSteadyState& state) : U_(state.potential()) {
  if (state.U0.size() < 2) throw PreconditionError("XiFunction: state has fewer than two samples");
  dr_ = state.rmax / static_cast<double>(state.U0.size() - 1);
  prefix_max_.resize(state.U0.size());
  double m = 0.0;
  for (std::size_t i = 0; i < state.U0.size(); ++i) prefix_max_[i] = m = std::max(m, std::abs(state.U0[i]));
}

double XiFunction::operator()(double r) const {
  if (prefix_max_.empty()) return 0.0;
  if (r <= 0.0) return prefix_max_.front();
  const auto i = static_cast<std::size_t>(r / dr_);
  const double knots = i < prefix_max_.size() ? prefix_max_[i] : prefix_max_.back();
  return std::max(knots, std::abs(U_(r)));
}

double xi(double r, const RadialSteadyState& state) { return XiFunction(state)(r); }

double compute_r0(const RadialSteadyState& state, const ExternalField& field, double tail_factor) {
  if (field.kind() != PinchKind::theta) throw PreconditionError("compute_r0: theta pinch required");
  if (state.r.size() < 2) throw PreconditionError("compute_r0: empty state");
  const RadialPotential U = state.potential();
  std::vector<double> radii = state.r;
  std::vector<double> values = state.U0;
  const int n_tail = 400;
  const double step = std::log(tail_factor) / n_tail;
  for (int k = 1; k <= n_tail; ++k) {
    const double r = state.rmax * std::exp(k * step);
    radii.push_back(r);
    values.push_back(U(r));
  }
  auto holds = [&](std::size_t i) {
    const double r = radii[i];
    return std::min(field.A_phi(r), r) >= std::sqrt(2.0 * std::abs(values[i])) - 1e-14;
  };
  if (!holds(radii.size() - 1))
    throw Error("compute_r0: min(A_phi, r) < sqrt(2|U0|) at the far end of the scan (S3 violated?)");
  std::size_t first = radii.size() - 1;
  while (first > 0 && holds(first - 1)) --first;
  return radii[first];
}

CasimirSpec::CasimirSpec(AnsatzPair ansatz, std::array<double, 2> E_min, double r0, double xi_r0)
    : ansatz_(std::move(ansatz)), r0_(r0), xi_r0_(xi_r0) {
  if (!(xi_r0 >= 0.0)) throw PreconditionError("CasimirSpec: xi(r0) must be nonnegative");
  for (Species s : kBothSpecies) {
    const EnergyProfile& th = ansatz_[s].theta;
    SpeciesCasimir& c = species_[index_of(s)];
    c.E_min = E_min[index_of(s)];
    c.E_max = th.E_max;
    c.inverse = ThetaInverse(th, c.E_min);
    c.theta_max = c.inverse.theta_max();
    c.slope_at_min = th.derivative(c.E_min);
    if (!(c.slope_at_min < 0.0)) throw PreconditionError("CasimirSpec: theta'(E_min) must be negative");
    double inf_slope = 0.0;
    const int n = 4096;
    std::vector<double> probes;
    for (int k = 0; k < n; ++k) probes.push_back(c.E_min + (c.E_max - c.E_min) * k / n);
    for (double e : th.kinks())
      if (e > c.E_min && e < c.E_max) probes.push_back(e);
    for (double e : probes) inf_slope = std::min(inf_slope, th.derivative(e));
    c.c_theta = -1.0 / inf_slope;
    c.c_pm = std::max(2.0 * std::max(std::abs(c.E_min), std::abs(c.E_max)), 1.0 / std::abs(c.slope_at_min));
  }
}

double CasimirSpec::phi(double tau, double sigma, double mu, Species s) const {
  if (tau < 0.0) throw PreconditionError("phi: tau must be nonnegative");
  if (tau == 0.0 || sigma == 0.0) return 0.0;
  const double sig = charge_sign(s) * sigma;
  if (sig > 0.0) return (sig + xi_r0_) * tau;
  const SpeciesCasimir& c = species_[index_of(s)];
  const double ps = psi(sigma, mu, s);
  if (!(ps > 0.0)) return std::numeric_limits<double>::infinity();
  const double S = tau / ps;
  if (S <= c.theta_max) return -ps * c.inverse.integral(S);
  const double d = tau - c.theta_max * ps;
  return -d * d / (2.0 * c.slope_at_min * ps) - c.E_min * d - ps * c.inverse.integral(c.theta_max);
}

double CasimirSpec::phi_tau(double tau, double sigma, double mu, Species s) const {
  if (tau < 0.0) throw PreconditionError("phi_tau: tau must be nonnegative");
  if (sigma == 0.0) return 0.0;
  const double sig = charge_sign(s) * sigma;
  if (sig > 0.0) return sig + xi_r0_;
  const SpeciesCasimir& c = species_[index_of(s)];
  const double ps = psi(sigma, mu, s);
  if (!(ps > 0.0)) return std::numeric_limits<double>::infinity();
  const double S = tau / ps;
  if (S <= c.theta_max) return -c.inverse(S);
  return -(tau - c.theta_max * ps) / (c.slope_at_min * ps) - c.E_min;
}

CasimirSpec build_casimir_spec(const SteadyStateModel& model) {
  const RadialSteadyState& st = model.state();
  if (model.field().kind() != PinchKind::theta)
    throw PreconditionError("build_casimir_spec: the Casimir construction needs a theta pinch");
  const double r0 = compute_r0(st, model.field());
  const double xr0 = XiFunction(st)(r0);
  return CasimirSpec(model.ansatz(), {st.E_min_plus, st.E_min_minus}, r0, xr0);
}

namespace {
double checked(double v) {
  if (!std::isfinite(v)) throw Error("casimir_functional: non-finite integrand (datum outside X)");
  return v;
}
}  // namespace

double casimir_functional(const MarkerEnsemble& ens, const CasimirSpec& spec) {
  double total = 0.0;
  for (Species s : kBothSpecies) {
    const SpeciesMarkers& m = ens[s];
    if (m.size() == 0) continue;
    if (!m.has_labels()) throw PreconditionError("casimir_functional: markers carry no labels");
    for (std::size_t i = 0; i < m.size(); ++i) total += checked(spec.phi(m.f[i], m.F[i], m.G[i], s)) * m.vol[i];
  }
  return total;
}

double casimir_functional_current(const MarkerEnsemble& ens, const CasimirSpec& spec,
                                  const SteadyStateModel& model) {
  double total = 0.0;
  for (Species s : kBothSpecies) {
    const SpeciesMarkers& m = ens[s];
    for (std::size_t i = 0; i < m.size(); ++i) {
      const InvariantTriple inv = model.invariants(m.point(i, s));
      total += checked(spec.phi(m.f[i], inv.F, inv.G, s)) * m.vol[i];
    }
  }
  return total;
}

}  // namespace vp25
