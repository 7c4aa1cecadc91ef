#include "vp25/casimir/stability.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "vp25/core/error.hpp"

namespace vp25 {

namespace {

void check_shapes(const LatticeValues& f, const PhaseLattice& lattice) {
  for (Species s : kBothSpecies)
    if (f[index_of(s)].size() != lattice[s].size())
      throw PreconditionError("lattice values do not match the lattice");
}

double max_psi(const PhaseLattice& lattice) {
  double m = 0.0;
  for (Species s : kBothSpecies)
    for (double p : lattice[s].psi) m = std::max(m, p);
  return m;
}

/// Radially binned charge difference sum_s s (f - f0) w per ring, divided by the ring area.
std::vector<double> binned_charge_difference(const LatticeValues& f, const PhaseLattice& lattice) {
  const int n = lattice.spec().n_r;
  std::vector<double> q(static_cast<std::size_t>(n), 0.0);
  for (Species s : kBothSpecies) {
    const SpeciesLattice& L = lattice[s];
    const auto& v = f[index_of(s)];
    for (std::size_t i = 0; i < L.size(); ++i)
      q[static_cast<std::size_t>(lattice.ring_of(L.x_node[i]))] += charge_sign(s) * (v[i] - L.f0[i]) * L.weight[i];
  }
  for (int j = 0; j < n; ++j) q[static_cast<std::size_t>(j)] /= lattice.ring_area(j);
  return q;
}

}  // namespace

double RhsBreakdown::total() const {
  double t = entropy + log_term;
  for (int s = 0; s < 2; ++s) t += T1[s] + T2[s] + T3[s];
  return t;
}

double RhsBreakdown::braces() const {
  double t = entropy + log_term;
  for (int s = 0; s < 2; ++s) t += T1_unit[s] + T2[s] + T3[s];
  return t;
}

RhsBreakdown stability_rhs(const LatticeValues& f, const PhaseLattice& lattice, const CasimirSpec& spec,
                           const XiFunction& xi, double R, const StabilityOptions& opt) {
  check_shapes(f, lattice);
  RhsBreakdown out;
  const double floor = opt.psi_floor_rel * max_psi(lattice);
  double R_all = 0.0;
  for (Species s : kBothSpecies) {
    const int si = index_of(s);
    const SpeciesLattice& L = lattice[s];
    const auto& v = f[si];
    double finf = 0.0;
    for (std::size_t i = 0; i < L.size(); ++i) finf = std::max({finf, v[i], L.f0[i]});
    out.f_inf[si] = finf;
    for (std::size_t i = 0; i < L.size(); ++i) {
      if (v[i] <= 0.0) continue;
      const double ro = lattice.ring_outer(lattice.ring_of(L.x_node[i]));
      const double sF = charge_sign(s) * L.inv[i].F;
      R_all = std::max(R_all, ro);
      if (sF < 0.0) out.R_neg[si] = std::max(out.R_neg[si], ro);
      if (sF > 0.0) out.R_pos[si] = std::max(out.R_pos[si], ro);
    }
  }
  out.S = std::max(R_all, R);
  for (Species s : kBothSpecies) {
    const int si = index_of(s);
    const SpeciesLattice& L = lattice[s];
    const auto& v = f[si];
    const double c = spec[s].c_pm;
    const double xi_neg = xi(std::max(out.R_neg[si], R));
    const double xi_pos = xi(out.R_pos[si]);
    for (std::size_t i = 0; i < L.size(); ++i) {
      const double d = std::abs(v[i] - L.f0[i]) * L.weight[i];
      if (d == 0.0) continue;
      const double sF = charge_sign(s) * L.inv[i].F;
      const double kin = 0.5 * dot(L.points[i].p, L.points[i].p);
      if (sF < 0.0) {
        out.T2[si] += xi_neg * d;
        if (L.psi[i] < floor || L.psi[i] <= 0.0) {
          out.excluded_mass += d;
          continue;
        }
        out.T1[si] += (c + c * out.f_inf[si] / L.psi[i] + kin) * d;
        out.T1_unit[si] += (1.0 + out.f_inf[si] / L.psi[i] + kin) * d;
      } else if (sF > 0.0) {
        out.T3[si] += (sF + spec.xi_r0() + kin + xi_pos) * d;
      }
    }
  }
  const std::vector<double> q = binned_charge_difference(f, lattice);
  for (int j = 0; j < lattice.spec().n_r; ++j) {
    const double a = lattice.ring_area(j);
    out.drho_l1 += std::abs(q[static_cast<std::size_t>(j)]) * a;
    out.drho_charge += q[static_cast<std::size_t>(j)] * a;
  }
  if (std::abs(out.drho_charge) > opt.charge_tol_rel * out.drho_l1 && out.drho_l1 > 0.0)
    throw PreconditionError("stability_rhs: perturbation changes the total charge (datum outside X)");
  if (out.drho_l1 == 0.0) {
    out.degenerate = true;
    return out;
  }
  double ent = 0.0;
  for (int j = 0; j < lattice.spec().n_r; ++j) {
    const double x = std::abs(q[static_cast<std::size_t>(j)]);
    if (x > 0.0) ent += x * std::log(x / out.drho_l1) * lattice.ring_area(j);
  }
  out.entropy = 0.5 * out.drho_l1 * ent;
  out.log_term = (opt.C + std::log(2.0 * out.S)) * out.drho_l1 * out.drho_l1;
  return out;
}

double stability_lhs(const LatticeValues& f, const PhaseLattice& lattice, const CasimirSpec& spec,
                     const StabilityOptions& opt) {
  check_shapes(f, lattice);
  const double floor = opt.psi_floor_rel * max_psi(lattice);
  double total = 0.0;
  for (Species s : kBothSpecies) {
    const SpeciesLattice& L = lattice[s];
    const auto& v = f[index_of(s)];
    double acc = 0.0;
    for (std::size_t i = 0; i < L.size(); ++i) {
      if (!(charge_sign(s) * L.inv[i].F < 0.0) || L.psi[i] < floor || L.psi[i] <= 0.0) continue;
      const double d = v[i] - L.f0[i];
      acc += d * d / L.psi[i] * L.weight[i];
    }
    total += 0.5 * spec[s].c_theta * acc;
  }
  return total;
}

double l2_distance_sq(const LatticeValues& f, const PhaseLattice& lattice) {
  check_shapes(f, lattice);
  double total = 0.0;
  for (Species s : kBothSpecies) {
    const SpeciesLattice& L = lattice[s];
    const auto& v = f[index_of(s)];
    for (std::size_t i = 0; i < L.size(); ++i) {
      const double d = v[i] - L.f0[i];
      total += d * d * L.weight[i];
    }
  }
  return total;
}

double energy_casimir_gap(const LatticeValues& f, const PhaseLattice& lattice, const CasimirSpec& spec) {
  check_shapes(f, lattice);
  double total = 0.0;
  for (Species s : kBothSpecies) {
    const SpeciesLattice& L = lattice[s];
    const auto& v = f[index_of(s)];
    for (std::size_t i = 0; i < L.size(); ++i) {
      if (v[i] == L.f0[i]) continue;
      const InvariantTriple& inv = L.inv[i];
      total += (spec.phi(v[i], inv.F, inv.G, s) - spec.phi(L.f0[i], inv.F, inv.G, s) +
                inv.E * (v[i] - L.f0[i])) *
               L.weight[i];
    }
  }
  // -double-integral ln|x-y| drho drho for ring charges: the ring average of ln|x-y| is ln max(r, r')
  const std::vector<double> q = binned_charge_difference(f, lattice);
  const int n = lattice.spec().n_r;
  double quad = 0.0;
  for (int j = 0; j < n; ++j) {
    const double qj = q[static_cast<std::size_t>(j)] * lattice.ring_area(j);
    for (int k = 0; k < n; ++k) {
      const double qk = q[static_cast<std::size_t>(k)] * lattice.ring_area(k);
      quad -= qj * qk * std::log(lattice.ring_radius(std::max(j, k)));
    }
  }
  return total + quad;
}

RegionNorms region_norms_labels(const MarkerEnsemble& ens) {
  RegionNorms out;
  for (Species s : kBothSpecies) {
    const SpeciesMarkers& m = ens[s];
    if (m.size() == 0) continue;
    if (!m.has_labels()) throw PreconditionError("region_norms_labels: markers carry no labels");
    const int si = index_of(s);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!(charge_sign(s) * m.F[i] >= 0.0)) continue;
      out.l1[si] += m.f[i] * m.vol[i];
      out.l2[si] += m.f[i] * m.f[i] * m.vol[i];
      out.linf[si] = std::max(out.linf[si], m.f[i]);
    }
    out.l2[si] = std::sqrt(out.l2[si]);
  }
  return out;
}

RegionNorms region_norms_lattice(const LatticeValues& f, const PhaseLattice& lattice) {
  check_shapes(f, lattice);
  RegionNorms out;
  for (Species s : kBothSpecies) {
    const int si = index_of(s);
    const SpeciesLattice& L = lattice[s];
    for (std::size_t i = 0; i < L.size(); ++i) {
      if (!(charge_sign(s) * L.inv[i].F >= 0.0)) continue;
      const double d = std::abs(f[si][i] - L.f0[i]);
      out.l1[si] += d * L.weight[i];
      out.l2[si] += d * d * L.weight[i];
      out.linf[si] = std::max(out.linf[si], d);
    }
    out.l2[si] = std::sqrt(out.l2[si]);
  }
  return out;
}

double remark_constant(const CasimirSpec& spec) {
  double psi_max = 0.0, c_theta = std::numeric_limits<double>::infinity(), c_pm = 0.0;
  for (Species s : kBothSpecies) {
    psi_max = std::max(psi_max, spec.ansatz()[s].psi.amp);
    c_theta = std::min(c_theta, spec[s].c_theta);
    c_pm = std::max(c_pm, spec[s].c_pm);
  }
  return 2.0 * psi_max / c_theta * std::max(1.0, c_pm);
}

bool StabilityReport::pass() const {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const StabilityRow& r) { return r.pass; });
}

bool StabilityReport::pass_strict() const {
  return !rows.empty() &&
         std::all_of(rows.begin(), rows.end(), [](const StabilityRow& r) { return r.pass_strict; });
}

bool StabilityReport::remark_pass() const {
  return !rows.empty() &&
         std::all_of(rows.begin(), rows.end(), [](const StabilityRow& r) { return r.remark_pass; });
}

double StabilityReport::region_norm_drift() const {
  if (rows.empty()) return 0.0;
  const RegionNorms& a = rows.front().labels;
  double worst = 0.0;
  auto rel = [](double x, double y) {
    const double scale = std::max(std::abs(x), std::abs(y));
    return scale == 0.0 ? 0.0 : std::abs(x - y) / scale;
  };
  for (const auto& r : rows)
    for (int s = 0; s < 2; ++s)
      worst = std::max({worst, rel(a.l1[s], r.labels.l1[s]), rel(a.l2[s], r.labels.l2[s]),
                        rel(a.linf[s], r.labels.linf[s])});
  return worst;
}

void StabilityReport::write_csv(const std::string& path) const {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw Error("StabilityReport: cannot open " + path);
  std::fprintf(f,
               "t,lhs,rhs,floor,pass,pass_strict,l1_plus,l1_minus,l2_plus,l2_minus,linf_plus,linf_minus,"
               "lat_l1_plus,lat_l1_minus,lat_l2_plus,lat_l2_minus,l2sq,remark_bound,remark_floor,remark_pass\n");
  for (const auto& r : rows) {
    std::fprintf(f, "%.17g,%.17g,%.17g,%.17g,%d,%d", r.t, r.lhs, r.rhs, r.floor, r.pass ? 1 : 0,
                 r.pass_strict ? 1 : 0);
    for (const auto* a : {&r.labels.l1, &r.labels.l2, &r.labels.linf, &r.lattice.l1, &r.lattice.l2})
      std::fprintf(f, ",%.17g,%.17g", (*a)[0], (*a)[1]);
    std::fprintf(f, ",%.17g,%.17g,%.17g,%d\n", r.l2sq, r.remark_bound, r.remark_floor, r.remark_pass ? 1 : 0);
  }
  std::fclose(f);
}

std::string StabilityReport::summary() const {
  std::ostringstream o;
  o.precision(6);
  o << "epsilon " << epsilon << "\n";
  o << "rhs total " << rhs.total() << "  (T1 " << rhs.T1[0] << " / " << rhs.T1[1] << ", T2 " << rhs.T2[0]
    << " / " << rhs.T2[1] << ", T3 " << rhs.T3[0] << " / " << rhs.T3[1] << ", entropy " << rhs.entropy
    << ", log " << rhs.log_term << ")\n";
  o << "drho l1 " << rhs.drho_l1 << ", net charge " << rhs.drho_charge << ", S " << rhs.S
    << ", excluded mass " << rhs.excluded_mass << (rhs.degenerate ? " (degenerate)" : "") << "\n";
  o << "energy-Casimir gap " << hc_gap << "\n";
  double worst = 0.0, floor = 0.0;
  for (const auto& r : rows) {
    worst = std::max(worst, r.rhs > 0.0 ? r.lhs / r.rhs : (r.lhs > 0.0 ? 1e300 : 0.0));
    floor = std::max(floor, r.floor);
  }
  o << "max lhs/rhs " << worst << ", max discretization floor " << floor << "\n";
  o << "pass " << (pass() ? "yes" : "no") << ", strict pass (no floor) " << (pass_strict() ? "yes" : "no") << "\n";
  o << "remark constant " << remark_constant << ", remark pass " << (remark_pass() ? "yes" : "no") << "\n";
  o << "region norm drift (labels) " << region_norm_drift() << "\n";
  return o.str();
}

}  // namespace vp25
