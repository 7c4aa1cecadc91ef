#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "vp25/fieldsolve/external_field.hpp"
#include "vp25/fieldsolve/interp.hpp"
#include "vp25/pusher/pusher.hpp"

namespace vp25 {

/// Self-consistent E on the grid at the midpoint time (k + 1/2) dt of every
/// step k of a uniform-step run, plus the static external field. Outside the
/// grid E is the monopole far field 2 M x / |x|^2 of the run's net charge.
class FieldHistory {
 public:
  FieldHistory() = default;
  FieldHistory(GridGeometry geometry, double dt, ExternalField field, double net_charge,
               std::uint64_t initial_data_hash);

  void push_step(std::vector<double> Ex, std::vector<double> Ey);

  std::size_t steps() const { return ex_.size(); }
  double dt() const { return dt_; }
  double final_time() const { return dt_ * static_cast<double>(ex_.size()); }
  const ExternalField& field() const { return field_; }
  const GridGeometry& geometry() const { return geom_; }
  std::uint64_t initial_data_hash() const { return hash_; }

  /// Self-consistent E used during step k.
  Vec2 E_step(std::size_t k, Vec2 x) const;
  /// Linear interpolation in time between midpoint snapshots.
  Vec2 E_time(double t, Vec2 x) const;
  Vec3 B(Vec2 x) const { return field_.B(x); }

  /// Characteristic through z at time t traced back to time 0.
  /// Throws PreconditionError if t exceeds the recorded span.
  PhasePoint trace_back(const PhasePoint& z, double t) const;

 private:
  Vec2 far_field(Vec2 x) const;
  Vec2 gather_snapshot(std::size_t k, Vec2 x) const;

  GridGeometry geom_;
  double dt_ = 0.0;
  ExternalField field_;
  double charge_ = 0.0;
  std::uint64_t hash_ = 0;
  std::vector<std::vector<double>> ex_, ey_;
};

using PhaseSampler = std::function<double(const PhasePoint&)>;

/// f(t, z) = f_init(Z(0, t, z)) along the recorded characteristics.
double backward_evaluate(const PhaseSampler& f_init, const FieldHistory& history, double t,
                         const PhasePoint& z);

}  // namespace vp25
