#include "vp25/fieldsolve/grid.hpp"

#include <cmath>

#include "vp25/core/error.hpp"

namespace vp25 {

Grid2D Grid2D::make(int nx, int ny, double h, Vec2 origin) {
  if (nx < 2 || ny < 2) throw PreconditionError("Grid2D: need at least two cells per axis");
  if (!(h > 0.0)) throw PreconditionError("Grid2D: spacing must be positive");
  Grid2D g;
  g.nx = nx;
  g.ny = ny;
  g.h = h;
  g.origin = origin;
  const std::size_t n = g.node_count();
  for (auto* v : {&g.rho_plus, &g.rho_minus, &g.rho, &g.U, &g.Ex, &g.Ey}) v->assign(n, 0.0);
  return g;
}

Grid2D Grid2D::centered(int n, double half_width) {
  if (!(half_width > 0.0)) throw PreconditionError("Grid2D: half width must be positive");
  return make(n, n, 2.0 * half_width / n, {-half_width, -half_width});
}

void Grid2D::validate() const {
  if (!(h > 0.0)) throw PreconditionError("Grid2D: spacing must be positive");
  if (nx < 2 || ny < 2) throw PreconditionError("Grid2D: need at least two cells per axis");
  const std::size_t n = node_count();
  for (const auto* v : {&rho_plus, &rho_minus, &rho, &U, &Ex, &Ey})
    if (v->size() != n) throw PreconditionError("Grid2D: array size does not match nx, ny");
}

void Grid2D::clear_charge() {
  std::fill(rho_plus.begin(), rho_plus.end(), 0.0);
  std::fill(rho_minus.begin(), rho_minus.end(), 0.0);
  std::fill(rho.begin(), rho.end(), 0.0);
}

void Grid2D::combine_rho() {
  for (std::size_t k = 0; k < rho.size(); ++k) rho[k] = rho_plus[k] - rho_minus[k];
}

double Grid2D::total_charge() const {
  double s = 0.0;
  for (double v : rho) s += v;
  return s * h * h;
}

bool Grid2D::interior(Vec2 x) const {
  const double sx = (x.x - origin.x) / h;
  const double sy = (x.y - origin.y) / h;
  return sx >= 1.0 && sy >= 1.0 && sx < nx - 1.0 && sy < ny - 1.0;
}

bool Grid2D::same_geometry(const Grid2D& o) const {
  return nx == o.nx && ny == o.ny && h == o.h && origin.x == o.origin.x &&
         origin.y == o.origin.y;
}

}  // namespace vp25
