#include "vp25/kernels/convolution.hpp"

#include <cmath>

#include "vp25/fieldsolve/poisson.hpp"

namespace vp25::kernels {

namespace {

struct Sums {
  double u, ex, ey;
};

inline Sums node_sum(const Grid2D& g, int i, int j, double self) {
  const double area = g.h * g.h;
  Sums s{0.0, 0.0, 0.0};
  for (int jj = 0; jj <= g.ny; ++jj)
    for (int ii = 0; ii <= g.nx; ++ii) {
      const double q = g.rho[g.index(ii, jj)];
      if (q == 0.0) continue;
      const int dx = i - ii;
      const int dy = j - jj;
      if (dx == 0 && dy == 0) {
        s.u += self * q;
        continue;
      }
      const double d2 = static_cast<double>(dx * dx + dy * dy);
      s.u += -std::log(g.h * g.h * d2) * q;
      s.ex += 2.0 * dx / (g.h * d2) * q;
      s.ey += 2.0 * dy / (g.h * d2) * q;
    }
  return {s.u * area, s.ex * area, s.ey * area};
}

}  // namespace

namespace serial {

void direct_field(Grid2D& g) {
  g.validate();
  check_support(g);
  const double self = -2.0 * self_cell_log_average(g.h);
  for (int j = 0; j <= g.ny; ++j)
    for (int i = 0; i <= g.nx; ++i) {
      const Sums s = node_sum(g, i, j, self);
      const std::size_t k = g.index(i, j);
      g.U[k] = s.u;
      g.Ex[k] = s.ex;
      g.Ey[k] = s.ey;
    }
}

}  // namespace serial

namespace omp {

void direct_field(Grid2D& g) {
  g.validate();
  check_support(g);
  const double self = -2.0 * self_cell_log_average(g.h);
  const int nodes = (g.nx + 1) * (g.ny + 1);
#pragma omp parallel for schedule(dynamic, 16)
  for (int k = 0; k < nodes; ++k) {
    const int i = k % (g.nx + 1);
    const int j = k / (g.nx + 1);
    const Sums s = node_sum(g, i, j, self);
    g.U[static_cast<std::size_t>(k)] = s.u;
    g.Ex[static_cast<std::size_t>(k)] = s.ex;
    g.Ey[static_cast<std::size_t>(k)] = s.ey;
  }
}

}  // namespace omp

}  // namespace vp25::kernels
