#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "vp25/kinetic/ensemble.hpp"

namespace vp25 {

struct DiagnosticsRow {
  double t = 0.0;
  double H = 0.0, Ekin = 0.0, Epot = 0.0;
  double casimir = 0.0;
  double P = 0.0, X = 0.0;
  double M = 0.0;
  std::array<double, 2> l1{}, l2{}, linf{};
  std::array<double, 2> rho_l1{};  // sum of deposited rho h^2 per species
  std::map<std::string, double> extra;
};

/// Per-species L^q norm from marker quadrature; q = infinity gives max f.
std::array<double, 2> lq_norms(const MarkerEnsemble& ensemble, double q);

/// Current (max |p|, max |x|) over all markers.
std::array<double, 2> support_extrema(const MarkerEnsemble& ensemble);

double kinetic_energy(const MarkerEnsemble& ensemble);

/// Columns t,H,Ekin,Epot,Casimir,P,X,M,L1_plus,L1_minus,L2_plus,L2_minus,
/// Linf_plus,Linf_minus,rhoL1_plus,rhoL1_minus followed by the union of extra
/// keys in sorted order.
void write_diagnostics_csv(const std::string& path, const std::vector<DiagnosticsRow>& rows);

}  // namespace vp25
