#pragma once

#include <array>
#include <string>
#include <vector>

#include "vp25/casimir/casimir_spec.hpp"
#include "vp25/casimir/lattice.hpp"
#include "vp25/fieldsolve/energy.hpp"

namespace vp25 {

struct StabilityOptions {
  double psi_floor_rel = 1e-12;  // nodes with psi < floor * max psi are excluded from 1/psi terms
  double C = kLogHlsConstant;
  double charge_tol_rel = 0.02;  // |int drho| <= tol * ||drho||_1 on the lattice
};

/// Terms of the upper bound evaluated from the initial datum on the lattice.
struct RhsBreakdown {
  std::array<double, 2> T1{}, T2{}, T3{};  // {sF<0} with c_pm, {sF<0} xi term, {sF>0}
  std::array<double, 2> T1_unit{};         // T1 with the constant replaced by 1
  std::array<double, 2> f_inf{};           // max(||f_init||_inf, ||f0||_inf) on the lattice
  std::array<double, 2> R_neg{}, R_pos{};  // support radii of f_init restricted to sF<0 / sF>0
  double S = 0.0;                           // max(R(f_init), R)
  double drho_l1 = 0.0, drho_charge = 0.0;
  double entropy = 0.0, log_term = 0.0;
  double excluded_mass = 0.0;  // sum |f_init - f0| w over excluded nodes
  bool degenerate = false;     // ||drho||_1 == 0: entropy and log terms set to 0

  double total() const;
  /// Same bracket with the constants c_pm replaced by 1.
  double braces() const;
};

RhsBreakdown stability_rhs(const LatticeValues& f_init, const PhaseLattice& lattice, const CasimirSpec& spec,
                           const XiFunction& xi, double R, const StabilityOptions& options = {});

/// sum_s (c_theta/2) sum_{sF<0} (f - f0)^2 / psi w
double stability_lhs(const LatticeValues& f, const PhaseLattice& lattice, const CasimirSpec& spec,
                     const StabilityOptions& options = {});

/// sum_s ||f - f0||_2^2 over the whole lattice.
double l2_distance_sq(const LatticeValues& f, const PhaseLattice& lattice);

/// H_C(f_init) - H_C(f0) from the lattice, with the field-energy difference
/// from the radially binned charge difference.
double energy_casimir_gap(const LatticeValues& f_init, const PhaseLattice& lattice, const CasimirSpec& spec);

struct RegionNorms {
  std::array<double, 2> l1{}, l2{}, linf{};
};

/// ||f - f0|| on {sF >= 0} from the markers' initial labels (f0 vanishes there).
RegionNorms region_norms_labels(const MarkerEnsemble& ensemble);
/// The same norms from lattice values with F evaluated at the node.
RegionNorms region_norms_lattice(const LatticeValues& f, const PhaseLattice& lattice);

struct StabilityRow {
  double t = 0.0;
  double lhs = 0.0, rhs = 0.0;
  double floor = 0.0;        // discretization floor: lhs of the unperturbed run at t
  bool pass = false;         // lhs <= rhs + floor
  bool pass_strict = false;  // lhs <= rhs
  RegionNorms labels, lattice;
  double l2sq = 0.0;           // sum_s ||f - f0||_2^2
  double remark_bound = 0.0;
  double remark_floor = 0.0;  // l2sq of the unperturbed run at t
  bool remark_pass = false;
};

struct StabilityReport {
  RhsBreakdown rhs;
  double hc_gap = 0.0;
  double remark_constant = 0.0;
  double epsilon = 0.0;
  std::vector<StabilityRow> rows;

  bool pass() const;
  bool pass_strict() const;
  bool remark_pass() const;
  /// Largest relative change of the label region norms against t = 0.
  double region_norm_drift() const;
  void write_csv(const std::string& path) const;
  std::string summary() const;
};

/// (2 max psi / min c_theta) max(1, max c_pm): turns the weighted estimate
/// into a plain L2 estimate for bounded psi.
double remark_constant(const CasimirSpec& spec);

}  // namespace vp25
