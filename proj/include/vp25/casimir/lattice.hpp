#pragma once

#include <array>
#include <vector>

#include "vp25/pusher/field_history.hpp"
#include "vp25/steadystate/steady_state.hpp"

namespace vp25 {

/// Axisymmetric quadrature lattice: ring midpoints r_j on [0, r_max], n_angles
/// equally spaced angles per ring, momentum cell midpoints of [-p_half, p_half]^3.
/// Node weight 2 pi r_j dr dp^3 / n_angles. Nodes with steady-state energy
/// E >= E_max + energy_margin are dropped (negative margin keeps all).
struct LatticeSpec {
  double r_max = 0.5;
  int n_r = 16;
  int n_angles = 4;
  double p_half = 0.6;
  int n_p = 12;
  double energy_margin = 0.05;
};

struct SpeciesLattice {
  std::vector<PhasePoint> points;
  std::vector<double> weight;
  std::vector<InvariantTriple> inv;  // invariants of the steady state at the node
  std::vector<double> f0, psi;
  std::vector<int> x_node;  // ring * n_angles + angle
  std::size_t size() const { return points.size(); }
};

using LatticeValues = std::array<std::vector<double>, 2>;

class PhaseLattice {
 public:
  PhaseLattice(const LatticeSpec& spec, const SteadyStateModel& model);

  const SpeciesLattice& operator[](Species s) const { return species_[index_of(s)]; }
  const LatticeSpec& spec() const { return spec_; }
  double dr() const { return dr_; }
  double dp() const { return dp_; }
  int x_nodes() const { return spec_.n_r * spec_.n_angles; }
  int ring_of(int x_node) const { return x_node / spec_.n_angles; }
  double ring_radius(int ring) const { return (ring + 0.5) * dr_; }
  double ring_outer(int ring) const { return (ring + 1) * dr_; }
  double ring_area(int ring) const;
  double x_weight(int x_node) const { return ring_area(ring_of(x_node)) / spec_.n_angles; }
  double p_weight() const { return dp_ * dp_ * dp_; }
  std::size_t size() const { return species_[0].size() + species_[1].size(); }

  /// f0 at every node.
  LatticeValues steady_values() const;
  /// f at every node from a sampler.
  LatticeValues evaluate(const PhaseSampler& f, bool parallel = true) const;
  /// f(t) = f_init(Z(0, t, z)) at every node along the recorded characteristics.
  LatticeValues evaluate_backward(const PhaseSampler& f_init, const FieldHistory& history, double t,
                                  bool parallel = true) const;

 private:
  LatticeSpec spec_;
  double dr_ = 0.0, dp_ = 0.0;
  std::array<SpeciesLattice, 2> species_;
};

}  // namespace vp25
