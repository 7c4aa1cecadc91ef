#include "vp25/kernels/particles.hpp"

#include <omp.h>

#include <limits>

#include "vp25/core/error.hpp"
#include "vp25/pusher/boris.hpp"

namespace vp25::kernels {

namespace {

inline void scatter(const CellStencil& s, double w, double* rho) {
  const std::size_t k = s.k00;
  const std::size_t n = s.stride;
  rho[k] += w * (1.0 - s.wx) * (1.0 - s.wy);
  rho[k + 1] += w * s.wx * (1.0 - s.wy);
  rho[k + n] += w * (1.0 - s.wx) * s.wy;
  rho[k + n + 1] += w * s.wx * s.wy;
}

[[noreturn]] void escape(const MarkerSpan& m, std::size_t i) {
  throw MarkerEscape(m.species, i, m.x[i], m.y[i]);
}

inline void kick_one(MarkerSpan& m, std::size_t i, const GridGeometry& g, const double* ex,
                     const double* ey, const ExternalField& field, double q, double dt) {
  CellStencil s;
  const Vec2 x{m.x[i], m.y[i]};
  const Vec2 e = interior_stencil(g, x, s) ? gather(s, ex, ey) : Vec2{};
  const Vec3 p = boris_kick_rotate({m.px[i], m.py[i], m.pz[i]}, e, field.B(x), q, dt);
  m.px[i] = p.x;
  m.py[i] = p.y;
  m.pz[i] = p.z;
}

}  // namespace

namespace serial {

void drift(MarkerSpan m, double a) {
  for (std::size_t i = 0; i < m.n; ++i) {
    m.x[i] += a * m.px[i];
    m.y[i] += a * m.py[i];
  }
}

void deposit(const MarkerSpan& m, const GridGeometry& g, std::vector<double>& rho) {
  if (rho.size() != g.node_count()) throw PreconditionError("deposit: density size mismatch");
  const double inv_area = 1.0 / (g.h * g.h);
  CellStencil s;
  for (std::size_t i = 0; i < m.n; ++i) {
    if (!interior_stencil(g, {m.x[i], m.y[i]}, s)) escape(m, i);
    scatter(s, m.weight[i] * inv_area, rho.data());
  }
}

void kick(MarkerSpan m, const GridGeometry& g, const std::vector<double>& Ex,
          const std::vector<double>& Ey, const ExternalField& field, double dt) {
  const double q = charge_sign(m.species);
  for (std::size_t i = 0; i < m.n; ++i) kick_one(m, i, g, Ex.data(), Ey.data(), field, q, dt);
}

}  // namespace serial

namespace omp {

void drift(MarkerSpan m, double a) {
  const auto n = static_cast<std::ptrdiff_t>(m.n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    m.x[i] += a * m.px[i];
    m.y[i] += a * m.py[i];
  }
}

void deposit(const MarkerSpan& m, const GridGeometry& g, std::vector<double>& rho) {
  if (rho.size() != g.node_count()) throw PreconditionError("deposit: density size mismatch");
  const double inv_area = 1.0 / (g.h * g.h);
  const int nthreads = omp_get_max_threads();
  std::vector<std::vector<double>> buffers(static_cast<std::size_t>(nthreads));
  std::size_t first_bad = std::numeric_limits<std::size_t>::max();
  const auto n = static_cast<std::ptrdiff_t>(m.n);
#pragma omp parallel num_threads(nthreads) reduction(min : first_bad)
  {
    auto& buf = buffers[static_cast<std::size_t>(omp_get_thread_num())];
    buf.assign(rho.size(), 0.0);
    CellStencil s;
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      if (!interior_stencil(g, {m.x[i], m.y[i]}, s)) {
        first_bad = std::min(first_bad, static_cast<std::size_t>(i));
        continue;
      }
      scatter(s, m.weight[i] * inv_area, buf.data());
    }
  }
  if (first_bad != std::numeric_limits<std::size_t>::max()) escape(m, first_bad);
  for (const auto& buf : buffers)
    if (!buf.empty())
      for (std::size_t k = 0; k < rho.size(); ++k) rho[k] += buf[k];
}

void kick(MarkerSpan m, const GridGeometry& g, const std::vector<double>& Ex,
          const std::vector<double>& Ey, const ExternalField& field, double dt) {
  const double q = charge_sign(m.species);
  const auto n = static_cast<std::ptrdiff_t>(m.n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    kick_one(m, static_cast<std::size_t>(i), g, Ex.data(), Ey.data(), field, q, dt);
}

}  // namespace omp

}  // namespace vp25::kernels
