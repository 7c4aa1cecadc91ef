#include "vp25/casimir/lattice.hpp"

#include <cmath>
#include <numbers>

#include "vp25/core/error.hpp"
#include "vp25/kernels/backward.hpp"

namespace vp25 {

PhaseLattice::PhaseLattice(const LatticeSpec& spec, const SteadyStateModel& model) : spec_(spec) {
  if (!(spec.r_max > 0.0 && spec.p_half > 0.0) || spec.n_r < 1 || spec.n_angles < 1 || spec.n_p < 1)
    throw PreconditionError("PhaseLattice: extents and counts must be positive");
  dr_ = spec.r_max / spec.n_r;
  dp_ = 2.0 * spec.p_half / spec.n_p;
  const double two_pi = 2.0 * std::numbers::pi;
  for (Species s : kBothSpecies) {
    SpeciesLattice& L = species_[index_of(s)];
    const double E_cut = model.ansatz()[s].theta.E_max + spec.energy_margin;
    for (int j = 0; j < spec.n_r; ++j) {
      const double r = ring_radius(j);
      for (int a = 0; a < spec.n_angles; ++a) {
        const double phi = (a + 0.5) * two_pi / spec.n_angles;
        const Vec2 x{r * std::cos(phi), r * std::sin(phi)};
        const int xn = j * spec.n_angles + a;
        const double w = x_weight(xn) * p_weight();
        for (int k = 0; k < spec.n_p; ++k)
          for (int l = 0; l < spec.n_p; ++l)
            for (int m = 0; m < spec.n_p; ++m) {
              const Vec3 p{-spec.p_half + (k + 0.5) * dp_, -spec.p_half + (l + 0.5) * dp_,
                           -spec.p_half + (m + 0.5) * dp_};
              const PhasePoint z{x, p, s};
              const InvariantTriple inv = model.invariants(z);
              if (spec.energy_margin >= 0.0 && inv.E >= E_cut) continue;
              L.points.push_back(z);
              L.weight.push_back(w);
              L.inv.push_back(inv);
              L.f0.push_back(model.f0(z));
              L.psi.push_back(model.psi(inv.F, inv.G, s));
              L.x_node.push_back(xn);
            }
      }
    }
  }
}

double PhaseLattice::ring_area(int ring) const {
  return std::numbers::pi * dr_ * dr_ * (2.0 * ring + 1.0);
}

LatticeValues PhaseLattice::steady_values() const { return {species_[0].f0, species_[1].f0}; }

LatticeValues PhaseLattice::evaluate(const PhaseSampler& f, bool parallel) const {
  LatticeValues out;
  for (int si = 0; si < 2; ++si) {
    const auto& pts = species_[si].points;
    auto& v = out[si];
    v.assign(pts.size(), 0.0);
    const auto n = static_cast<std::ptrdiff_t>(pts.size());
#pragma omp parallel for schedule(static) if (parallel)
    for (std::ptrdiff_t i = 0; i < n; ++i) v[i] = f(pts[i]);
  }
  return out;
}

LatticeValues PhaseLattice::evaluate_backward(const PhaseSampler& f_init, const FieldHistory& history,
                                              double t, bool parallel) const {
  if (t == 0.0) return evaluate(f_init, parallel);
  LatticeValues out;
  for (int si = 0; si < 2; ++si) {
    if (parallel)
      kernels::omp::backward_values(species_[si].points, f_init, history, t, out[si]);
    else
      kernels::serial::backward_values(species_[si].points, f_init, history, t, out[si]);
  }
  return out;
}

}  // namespace vp25
