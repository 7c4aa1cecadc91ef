#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "vp25/kernels/particles.hpp"
#include "vp25/pusher/field_history.hpp"
#include "vp25/pusher/pusher.hpp"

namespace vp25 {

/// Markers of one species. f and vol are fixed at initialisation, so the
/// charge weight f*vol, the carried f-value and the invariant labels F, G
/// (taken at the initial point) never change.
struct SpeciesMarkers {
  std::vector<double> x, y, px, py, pz;
  std::vector<double> f, vol, weight;
  std::vector<double> F, G;
  std::vector<double> x0, y0, px0, py0, pz0;

  std::size_t size() const { return f.size(); }
  PhasePoint point(std::size_t i, Species s) const { return {{x[i], y[i]}, {px[i], py[i], pz[i]}, s}; }
  PhasePoint initial_point(std::size_t i, Species s) const {
    return {{x0[i], y0[i]}, {px0[i], py0[i], pz0[i]}, s};
  }
  bool has_labels() const { return F.size() == f.size() && !f.empty(); }
  kernels::MarkerSpan span(Species s);
};

struct MarkerEnsemble {
  std::array<SpeciesMarkers, 2> species;

  SpeciesMarkers& operator[](Species s) { return species[index_of(s)]; }
  const SpeciesMarkers& operator[](Species s) const { return species[index_of(s)]; }
  std::size_t total() const { return species[0].size() + species[1].size(); }
  /// sum weight(plus) - sum weight(minus)
  double net_charge() const;
};

/// Uniform lattice: positions at cell midpoints of [-x_half, x_half]^2 with
/// n_x cells per axis, kept if |x| < x_half; momenta at cell midpoints of
/// [-p_half, p_half]^3 with n_p cells per axis, kept if |p| < p_half.
struct LatticeBox {
  double x_half = 0.5;
  int n_x = 32;
  double p_half = 0.6;
  int n_p = 12;
};

using LabelFn = std::function<InvariantTriple(const PhasePoint&)>;

/// Deterministic lattice sampling of f_init restricted to f > 0. The seed
/// only permutes marker order. labels (optional) stores F, G per marker.
/// Throws DegenerateInput if a nontrivial box produces no markers and
/// require_nonempty is set.
MarkerEnsemble init_ensemble(const PhaseSampler& f_init, const std::array<LatticeBox, 2>& boxes,
                             std::uint64_t seed, const LabelFn& labels = {},
                             bool require_nonempty = false);

/// FNV-1a hash of the initial phase points and f-values.
std::uint64_t initial_data_hash(const MarkerEnsemble& ensemble);

}  // namespace vp25
