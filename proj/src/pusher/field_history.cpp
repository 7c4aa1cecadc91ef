#include "vp25/pusher/field_history.hpp"

#include <cmath>

#include "vp25/core/error.hpp"
#include "vp25/pusher/boris.hpp"

namespace vp25 {

FieldHistory::FieldHistory(GridGeometry geometry, double dt, ExternalField field, double net_charge,
                           std::uint64_t initial_data_hash)
    : geom_(geometry), dt_(dt), field_(std::move(field)), charge_(net_charge), hash_(initial_data_hash) {
  if (!(dt > 0.0)) throw PreconditionError("FieldHistory: dt must be positive");
}

void FieldHistory::push_step(std::vector<double> Ex, std::vector<double> Ey) {
  if (Ex.size() != geom_.node_count() || Ey.size() != geom_.node_count())
    throw PreconditionError("FieldHistory: snapshot size does not match the geometry");
  ex_.push_back(std::move(Ex));
  ey_.push_back(std::move(Ey));
}

Vec2 FieldHistory::far_field(Vec2 x) const {
  const double r2 = dot(x, x);
  if (r2 == 0.0) return {};
  return (2.0 * charge_ / r2) * x;
}

Vec2 FieldHistory::gather_snapshot(std::size_t k, Vec2 x) const {
  CellStencil s;
  if (!interior_stencil(geom_, x, s)) return far_field(x);
  return gather(s, ex_[k].data(), ey_[k].data());
}

Vec2 FieldHistory::E_step(std::size_t k, Vec2 x) const {
  if (k >= ex_.size()) throw PreconditionError("FieldHistory: step index beyond the record");
  return gather_snapshot(k, x);
}

Vec2 FieldHistory::E_time(double t, Vec2 x) const {
  if (ex_.empty()) throw PreconditionError("FieldHistory: empty record");
  const double s = t / dt_ - 0.5;
  if (s <= 0.0) return gather_snapshot(0, x);
  const auto k = static_cast<std::size_t>(s);
  if (k + 1 >= ex_.size()) return gather_snapshot(ex_.size() - 1, x);
  const double a = s - static_cast<double>(k);
  const Vec2 e0 = gather_snapshot(k, x);
  const Vec2 e1 = gather_snapshot(k + 1, x);
  return {(1.0 - a) * e0.x + a * e1.x, (1.0 - a) * e0.y + a * e1.y};
}

PhasePoint FieldHistory::trace_back(const PhasePoint& z, double t) const {
  if (t < 0.0) throw PreconditionError("trace_back: negative time");
  const double tol = 1e-9 * dt_;
  if (t > final_time() + tol) throw PreconditionError("trace_back: field history shorter than t");
  const double q = charge_sign(z.species);
  PhasePoint w = z;
  auto step = [&](double h, auto efield) {
    const Vec2 xm{w.x.x + 0.5 * h * w.p.x, w.x.y + 0.5 * h * w.p.y};
    const Vec2 e = efield(xm);
    const Vec3 b = field_.B(xm);
    w.p = boris_kick_rotate(w.p, e, b, q, h);
    w.x = {xm.x + 0.5 * h * w.p.x, xm.y + 0.5 * h * w.p.y};
  };

  double n_real = t / dt_;
  auto n = static_cast<std::size_t>(std::floor(n_real + 1e-9));
  if (n > ex_.size()) n = ex_.size();
  const double rest = t - static_cast<double>(n) * dt_;
  if (rest > tol) {
    // partial step from t back to n*dt; field at the partial interval's midpoint time
    const double tm = static_cast<double>(n) * dt_ + 0.5 * rest;
    step(-rest, [&](Vec2 x) { return E_time(tm, x); });
  }
  for (std::size_t k = n; k-- > 0;) step(-dt_, [&](Vec2 x) { return gather_snapshot(k, x); });
  return w;
}

double backward_evaluate(const PhaseSampler& f_init, const FieldHistory& history, double t,
                         const PhasePoint& z) {
  if (t == 0.0) return f_init(z);
  return f_init(history.trace_back(z, t));
}

}  // namespace vp25
