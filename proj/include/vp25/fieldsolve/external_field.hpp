#pragma once

#include <functional>
#include <vector>

#include "vp25/core/vec.hpp"

namespace vp25 {

/// Scalar function of r with an optional analytic derivative. Without one,
/// derivatives fall back to central differences.
struct RadialFunction {
  std::function<double(double)> value;
  std::function<double(double)> slope;

  double operator()(double r) const { return value ? value(r) : 0.0; }
  double derivative(double r) const;
  explicit operator bool() const { return static_cast<bool>(value); }
};

/// sum_k c[k] r^k
RadialFunction polynomial(std::vector<double> coeffs);
/// amp * (1 - ((r - center)/width)^2)^3 on |r - center| < width, zero elsewhere (C2).
RadialFunction compact_bump(double amp, double center, double width);
RadialFunction sum(RadialFunction a, RadialFunction b);

enum class PinchKind { theta, z, general };

class ExternalField {
 public:
  ExternalField() = default;

  static ExternalField none();
  static ExternalField theta_pinch(RadialFunction A_phi);
  static ExternalField z_pinch(RadialFunction A_3);
  /// Arbitrary vector potential; B is obtained by central differences.
  static ExternalField general(std::function<Vec3(Vec2)> A, double fd_step = 1e-5);

  PinchKind kind() const { return kind_; }
  bool axisymmetric() const { return kind_ != PinchKind::general; }

  Vec3 A(Vec2 x) const;
  Vec3 B(Vec2 x) const;

  /// Azimuthal / axial components for the axisymmetric kinds (zero otherwise).
  double A_phi(double r) const { return kind_ == PinchKind::theta ? a_phi_(r) : 0.0; }
  double A_3(double r) const { return kind_ == PinchKind::z ? a_3_(r) : 0.0; }
  double Bz_theta(double r) const;

  /// Same kind with delta added to the axisymmetric component.
  ExternalField perturbed(const RadialFunction& delta) const;

  /// max |B| over a polar sample of the disk of radius r.
  double max_abs_B(double r, int samples = 64) const;

  /// Gauge assumptions: A_phi(0) = 0 and A_3(0) = 0. Throws PreconditionError.
  void validate() const;

 private:
  PinchKind kind_ = PinchKind::theta;
  RadialFunction a_phi_;
  RadialFunction a_3_;
  std::function<Vec3(Vec2)> a_general_;
  double fd_step_ = 1e-5;
};

}  // namespace vp25
