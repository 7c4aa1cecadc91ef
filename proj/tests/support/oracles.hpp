#pragma once

#include <cmath>
#include <functional>
#include <numbers>

#include "vp25/fieldsolve/grid.hpp"

namespace vp25::testing {

/// Cell average of an indicator over the h x h square centred on each node,
/// by s x s supersampling. Writes into rho (not rho_plus/minus).
inline void fill_average(Grid2D& g, const std::function<double(double, double)>& f, int s = 8) {
  g.rho.assign(g.node_count(), 0.0);
  for (int j = 0; j <= g.ny; ++j)
    for (int i = 0; i <= g.nx; ++i) {
      const Vec2 c = g.node(i, j);
      double acc = 0.0;
      for (int b = 0; b < s; ++b)
        for (int a = 0; a < s; ++a)
          acc += f(c.x + g.h * ((a + 0.5) / s - 0.5), c.y + g.h * ((b + 0.5) / s - 0.5));
      g.rho[g.index(i, j)] = acc / (s * s);
    }
}

/// Uniform disk of radius a carrying total charge m, centred at c.
inline std::function<double(double, double)> disk(double a, double m, Vec2 c = {}) {
  const double d = m / (std::numbers::pi * a * a);
  return [=](double x, double y) { return std::hypot(x - c.x, y - c.y) <= a ? d : 0.0; };
}

/// Potential of the unit-charge unit disk: 1 - r^2 inside, -2 ln r outside.
inline double disk_potential(double r) { return r <= 1.0 ? 1.0 - r * r : -2.0 * std::log(r); }

}  // namespace vp25::testing
