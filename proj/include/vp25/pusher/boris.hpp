#pragma once

#include "vp25/core/vec.hpp"

namespace vp25 {

/// Half electric kick, exact-modulus magnetic rotation, half kick, for
/// dp/dt = q (E + p x B). A negative dt gives the exact inverse map.
inline Vec3 boris_kick_rotate(Vec3 p, Vec2 E, Vec3 B, double q, double dt) {
  const double half = 0.5 * q * dt;
  Vec3 pm{p.x + half * E.x, p.y + half * E.y, p.z};
  const Vec3 t = half * B;
  const double t2 = dot(t, t);
  const Vec3 s = (2.0 / (1.0 + t2)) * t;
  const Vec3 pp = pm + cross(pm, t);
  pm = pm + cross(pp, s);
  return {pm.x + half * E.x, pm.y + half * E.y, pm.z};
}

/// Rotation only (E = 0); preserves |p| up to rounding.
inline Vec3 boris_rotate(Vec3 p, Vec3 B, double q, double dt) {
  const Vec3 t = (0.5 * q * dt) * B;
  const Vec3 s = (2.0 / (1.0 + dot(t, t))) * t;
  const Vec3 pp = p + cross(p, t);
  return p + cross(pp, s);
}

}  // namespace vp25
