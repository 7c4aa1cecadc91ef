#pragma once

#include <functional>

#include "vp25/core/radial_profile.hpp"
#include "vp25/core/species.hpp"
#include "vp25/core/vec.hpp"
#include "vp25/fieldsolve/external_field.hpp"

namespace vp25 {

struct PhasePoint {
  Vec2 x;
  Vec3 p;
  Species species = Species::plus;
};

struct InvariantTriple {
  double E = 0.0;  // 1/2|p|^2 + s U0
  double F = 0.0;  // x1 p2 - x2 p1 + s r A_phi
  double G = 0.0;  // p3 + s A_3
};

using EFieldFn = std::function<Vec2(Vec2)>;
using BFieldFn = std::function<Vec3(Vec2)>;

/// One drift-kick-drift step: x advances half a step with (p1, p2), the
/// momentum gets a Boris update with fields at the midpoint position, then x
/// advances the second half. Time symmetric, so boris_step(., -dt) undoes it.
/// Throws Error on non-finite field values.
PhasePoint boris_step(const PhasePoint& z, const EFieldFn& E, const BFieldFn& B, double dt);

/// Flow invariants for a radial potential and an axisymmetric field.
InvariantTriple invariants(const PhasePoint& z, const RadialPotential& U0, const ExternalField& field);

/// E = -grad U0 for a radial potential.
Vec2 radial_field(const RadialPotential& U0, Vec2 x);

}  // namespace vp25
