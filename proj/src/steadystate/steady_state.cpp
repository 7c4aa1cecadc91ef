#include "vp25/steadystate/steady_state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "vp25/core/error.hpp"
#include "vp25/core/quadrature.hpp"
#include "vp25/fieldsolve/radial.hpp"
#include "vp25/kernels/radial_density.hpp"

namespace vp25 {

namespace {

// 2 int_0^pi b(r(u cos phi + c A)) dphi, with c = -1 for the regular sign
// convention and +1 for a flipped profile.
double sigma_angle_integral(const PsiProfile& psi, double r, double u, double A_phi,
                            const DensityQuadrature& q) {
  if (psi.sigma_shape == SigmaShape::flat) return 2.0 * std::numbers::pi;
  const double c = psi.flip ? 1.0 : -1.0;
  // b(r(u cos phi + c A)) > 0  <=>  cos phi > -c A / u
  if (r == 0.0 || u == 0.0) return 0.0;
  const double alpha = -c * A_phi / u;
  if (alpha >= 1.0) return 0.0;
  const double phi_max = alpha <= -1.0 ? std::numbers::pi : std::acos(alpha);
  const QuadratureRule& g = gauss_legendre(q.n_phi);
  const double half = 0.5 * phi_max;
  double acc = 0.0;
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    const double phi = half * (1.0 + g.nodes[k]);
    const double d = r * (u * std::cos(phi) + c * A_phi);
    if (d > 0.0) acc += g.weights[k] * -std::expm1(-d * d / (psi.u0 * psi.u0));
  }
  return 2.0 * half * acc;
}

double species_density(double U0, double r, const SpeciesAnsatz& a, Species s,
                       const ExternalField& field, const DensityQuadrature& q) {
  if (a.psi.trivial()) return 0.0;
  const double sg = charge_sign(s);
  const double V = sg * U0;
  const double E_max = a.theta.E_max;
  if (V >= E_max) return 0.0;
  const double A_phi = field.A_phi(r);
  const double A3 = field.A_3(r);
  const double gmax = std::sqrt(2.0 * (E_max - V));
  double G_lo = std::max(sg * A3 - gmax, -a.psi.mu_extent());
  double G_hi = std::min(sg * A3 + gmax, a.psi.mu_extent());
  if (a.psi.g0_cut) {
    if (s == Species::plus)
      G_hi = std::min(G_hi, a.psi.G0);
    else
      G_lo = std::max(G_lo, a.psi.G0);
  }
  if (!(G_hi > G_lo)) return 0.0;

  // Regular convention: the sigma factor needs u > A_phi; flipped: u > -A_phi.
  const double c = (a.psi.flip ? 1.0 : -1.0);
  const double u_onset = a.psi.sigma_shape == SigmaShape::flat ? 0.0 : std::max(0.0, -c * A_phi);
  const std::vector<double> kinks = a.theta.kinks();

  const QuadratureRule gG = gauss_legendre(q.n_G, G_lo, G_hi);
  const QuadratureRule& gv = gauss_legendre(q.n_v);
  double total = 0.0;
  std::vector<double> breaks;
  for (std::size_t iG = 0; iG < gG.nodes.size(); ++iG) {
    const double G = gG.nodes[iG];
    const double m = a.psi.mu_factor(G, s);
    if (m == 0.0) continue;
    const double E_low = 0.5 * (G - sg * A3) * (G - sg * A3) + V;
    if (E_low >= E_max) continue;
    const double v_max = std::sqrt(E_max - E_low);
    const double v_on = u_onset / std::numbers::sqrt2;
    if (v_on >= v_max) continue;
    breaks.assign({v_on, v_max});
    for (double Ek : kinks) {
      if (Ek > E_low) {
        const double vk = std::sqrt(Ek - E_low);
        if (vk > v_on && vk < v_max) breaks.push_back(vk);
      }
    }
    std::sort(breaks.begin(), breaks.end());
    double inner = 0.0;
    for (std::size_t b = 0; b + 1 < breaks.size(); ++b) {
      const double lo = breaks[b];
      const double hi = breaks[b + 1];
      const double half = 0.5 * (hi - lo);
      const double mid = 0.5 * (hi + lo);
      for (std::size_t k = 0; k < gv.nodes.size(); ++k) {
        const double v = mid + half * gv.nodes[k];
        const double th = a.theta(E_low + v * v);
        if (th == 0.0) continue;
        const double ang = sigma_angle_integral(a.psi, r, std::numbers::sqrt2 * v, A_phi, q);
        inner += gv.weights[k] * half * 2.0 * v * th * ang;
      }
    }
    total += gG.weights[iG] * m * inner;
  }
  return total;
}

}  // namespace

std::array<double, 2> density_from_potential(double U0, double r, const AnsatzPair& ansatz,
                                             const ExternalField& field,
                                             const DensityQuadrature& quad) {
  if (!std::isfinite(U0) || !(r >= 0.0)) throw PreconditionError("density_from_potential: bad input");
  return {species_density(U0, r, ansatz.plus, Species::plus, field, quad),
          species_density(U0, r, ansatz.minus, Species::minus, field, quad)};
}

RadialPotential RadialSteadyState::potential() const { return RadialPotential(rmax, U0, M); }

double support_radius(const std::vector<double>& samples, double rmax) {
  if (samples.size() < 2) throw PreconditionError("support_radius: need at least two samples");
  const double dr = rmax / static_cast<double>(samples.size() - 1);
  for (std::size_t i = samples.size(); i-- > 0;)
    if (samples[i] != 0.0) {
      if (i + 1 == samples.size()) throw Error("support_radius: support reaches the scan limit");
      return static_cast<double>(i + 1) * dr;
    }
  return 0.0;
}

double support_radius(const std::function<bool(double)>& nonzero, double rmax, int samples) {
  if (samples < 2 || !(rmax > 0.0)) throw PreconditionError("support_radius: bad scan parameters");
  const double dr = rmax / samples;
  if (nonzero(rmax)) throw Error("support_radius: support not detected within the scan range");
  for (int i = samples; i-- > 0;)
    if (nonzero(i * dr)) return (i + 1) * dr;
  return 0.0;
}

RadialSteadyState fixed_point_solve(const AnsatzPair& ansatz, const ExternalField& field,
                                    const FixedPointOptions& opt) {
  if (!(opt.rmax > 0.0) || opt.n_r < 3) throw PreconditionError("fixed_point_solve: bad radial grid");
  if (!(opt.relaxation > 0.0 && opt.relaxation <= 1.0))
    throw PreconditionError("fixed_point_solve: relaxation must lie in (0, 1]");
  field.validate();
  const auto n = static_cast<std::size_t>(opt.n_r);
  const double dr = opt.rmax / static_cast<double>(n - 1);

  RadialSteadyState st;
  st.rmax = opt.rmax;
  st.scan_resolution = dr;
  st.r.resize(n);
  for (std::size_t i = 0; i < n; ++i) st.r[i] = static_cast<double>(i) * dr;
  st.U0.assign(n, 0.0);
  st.rho_plus.assign(n, 0.0);
  st.rho_minus.assign(n, 0.0);

  std::vector<double> rho(n);
  auto densities = [&](const std::vector<double>& U) {
    auto fn = [&](std::size_t i) {
      return density_from_potential(U[i], st.r[i], ansatz, field, opt.quad);
    };
    if (opt.parallel)
      kernels::omp::tabulate(fn, st.rho_plus, st.rho_minus);
    else
      kernels::serial::tabulate(fn, st.rho_plus, st.rho_minus);
    for (std::size_t i = 0; i < n; ++i) rho[i] = st.rho_plus[i] - st.rho_minus[i];
    return radial_potential(rho, opt.rmax);
  };

  for (int it = 1; it <= opt.max_iter; ++it) {
    const std::vector<double> U_next = densities(st.U0);
    double diff = 0.0;
    for (std::size_t i = 0; i < n; ++i) diff = std::max(diff, std::abs(U_next[i] - st.U0[i]));
    for (std::size_t i = 0; i < n; ++i) st.U0[i] += opt.relaxation * (U_next[i] - st.U0[i]);
    st.iterations = it;
    st.increment = diff;
    if (!std::isfinite(diff)) break;
    if (diff < opt.tol) {
      st.converged = true;
      break;
    }
  }

  // Densities consistent with the returned U0, and the fixed-point residual.
  const std::vector<double> U_check = densities(st.U0);
  st.residual = 0.0;
  for (std::size_t i = 0; i < n; ++i) st.residual = std::max(st.residual, std::abs(U_check[i] - st.U0[i]));

  st.M = enclosed_charge(rho, opt.rmax).back();
  st.R_plus = support_radius(st.rho_plus, opt.rmax);
  st.R_minus = support_radius(st.rho_minus, opt.rmax);
  st.R = std::max(st.R_plus, st.R_minus);
  auto emin = [&](double R, double sg) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n && st.r[i] <= R + 1e-12; ++i) m = std::min(m, sg * st.U0[i]);
    return std::isfinite(m) ? m : 0.0;
  };
  st.E_min_plus = emin(st.R_plus, 1.0);
  st.E_min_minus = emin(st.R_minus, -1.0);
  return st;
}

SteadyStateModel::SteadyStateModel(RadialSteadyState state, AnsatzPair ansatz, ExternalField field)
    : state_(std::move(state)), ansatz_(std::move(ansatz)), field_(std::move(field)) {
  potential_ = state_.potential();
}

InvariantTriple SteadyStateModel::invariants(const PhasePoint& z) const {
  return vp25::invariants(z, potential_, field_);
}

double SteadyStateModel::f0(const PhasePoint& z) const {
  const InvariantTriple t = invariants(z);
  return ansatz_[z.species].eta(t.E, t.F, t.G, z.species);
}

double sample_f0(Vec2 x, Vec3 p, Species s, const RadialSteadyState& state, const AnsatzPair& ansatz,
                 const ExternalField& field) {
  const InvariantTriple t = invariants({x, p, s}, state.potential(), field);
  return ansatz[s].eta(t.E, t.F, t.G, s);
}

}  // namespace vp25
