#include "vp25/pusher/pusher.hpp"

#include <cmath>

#include "vp25/core/error.hpp"
#include "vp25/pusher/boris.hpp"

namespace vp25 {

PhasePoint boris_step(const PhasePoint& z, const EFieldFn& E, const BFieldFn& B, double dt) {
  const double q = charge_sign(z.species);
  PhasePoint out = z;
  const Vec2 xm{z.x.x + 0.5 * dt * z.p.x, z.x.y + 0.5 * dt * z.p.y};
  const Vec2 e = E ? E(xm) : Vec2{};
  const Vec3 b = B ? B(xm) : Vec3{};
  if (!is_finite(e) || !is_finite(b)) throw Error("boris_step: non-finite field value");
  out.p = boris_kick_rotate(z.p, e, b, q, dt);
  out.x = {xm.x + 0.5 * dt * out.p.x, xm.y + 0.5 * dt * out.p.y};
  return out;
}

InvariantTriple invariants(const PhasePoint& z, const RadialPotential& U0, const ExternalField& field) {
  const double s = charge_sign(z.species);
  const double r = norm(z.x);
  InvariantTriple t;
  t.E = 0.5 * dot(z.p, z.p) + s * U0(r);
  t.F = z.x.x * z.p.y - z.x.y * z.p.x + s * r * field.A_phi(r);
  t.G = z.p.z + s * field.A_3(r);
  return t;
}

Vec2 radial_field(const RadialPotential& U0, Vec2 x) {
  const double r = norm(x);
  if (r == 0.0) return {};
  const double d = -U0.derivative(r) / r;
  return {d * x.x, d * x.y};
}

}  // namespace vp25
