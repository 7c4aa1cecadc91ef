#include "vp25/fieldsolve/external_field.hpp"

#include <cmath>
#include <numbers>

#include "vp25/core/error.hpp"

namespace vp25 {

double RadialFunction::derivative(double r) const {
  if (!value) return 0.0;
  if (slope) return slope(r);
  const double step = 1e-6 * std::max(1.0, std::abs(r));
  if (r < step) return (value(r + step) - value(r)) / step;  // one-sided at the axis
  return (value(r + step) - value(r - step)) / (2.0 * step);
}

RadialFunction polynomial(std::vector<double> c) {
  RadialFunction f;
  f.value = [c](double r) {
    double acc = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * r + c[k];
    return acc;
  };
  f.slope = [c](double r) {
    double acc = 0.0;
    for (std::size_t k = c.size(); k-- > 1;) acc = acc * r + static_cast<double>(k) * c[k];
    return acc;
  };
  return f;
}

RadialFunction compact_bump(double amp, double center, double width) {
  if (!(width > 0.0)) throw PreconditionError("compact_bump: width must be positive");
  RadialFunction f;
  f.value = [=](double r) {
    const double s = (r - center) / width;
    if (std::abs(s) >= 1.0) return 0.0;
    const double q = 1.0 - s * s;
    return amp * q * q * q;
  };
  f.slope = [=](double r) {
    const double s = (r - center) / width;
    if (std::abs(s) >= 1.0) return 0.0;
    const double q = 1.0 - s * s;
    return amp * 3.0 * q * q * (-2.0 * s / width);
  };
  return f;
}

RadialFunction sum(RadialFunction a, RadialFunction b) {
  RadialFunction f;
  f.value = [a, b](double r) { return a(r) + b(r); };
  f.slope = [a, b](double r) { return a.derivative(r) + b.derivative(r); };
  return f;
}

ExternalField ExternalField::none() { return theta_pinch(polynomial({0.0})); }

ExternalField ExternalField::theta_pinch(RadialFunction A_phi) {
  ExternalField f;
  f.kind_ = PinchKind::theta;
  f.a_phi_ = std::move(A_phi);
  return f;
}

ExternalField ExternalField::z_pinch(RadialFunction A_3) {
  ExternalField f;
  f.kind_ = PinchKind::z;
  f.a_3_ = std::move(A_3);
  return f;
}

ExternalField ExternalField::general(std::function<Vec3(Vec2)> A, double fd_step) {
  if (!(fd_step > 0.0)) throw PreconditionError("ExternalField: difference step must be positive");
  ExternalField f;
  f.kind_ = PinchKind::general;
  f.a_general_ = std::move(A);
  f.fd_step_ = fd_step;
  return f;
}

Vec3 ExternalField::A(Vec2 x) const {
  const double r = norm(x);
  switch (kind_) {
    case PinchKind::theta: {
      if (r == 0.0) return {};
      const double a = a_phi_(r) / r;
      return {-a * x.y, a * x.x, 0.0};
    }
    case PinchKind::z:
      return {0.0, 0.0, a_3_(r)};
    case PinchKind::general:
      return a_general_(x);
  }
  return {};
}

double ExternalField::Bz_theta(double r) const {
  if (kind_ != PinchKind::theta) return 0.0;
  if (r < 1e-12) return 2.0 * a_phi_.derivative(0.0);
  return a_phi_(r) / r + a_phi_.derivative(r);
}

Vec3 ExternalField::B(Vec2 x) const {
  const double r = norm(x);
  switch (kind_) {
    case PinchKind::theta:
      return {0.0, 0.0, Bz_theta(r)};
    case PinchKind::z: {
      if (r == 0.0) return {};
      const double d = a_3_.derivative(r) / r;
      return {d * x.y, -d * x.x, 0.0};
    }
    case PinchKind::general: {
      const double e = fd_step_;
      const Vec3 ax_p = a_general_({x.x + e, x.y});
      const Vec3 ax_m = a_general_({x.x - e, x.y});
      const Vec3 ay_p = a_general_({x.x, x.y + e});
      const Vec3 ay_m = a_general_({x.x, x.y - e});
      const double inv = 0.5 / e;
      return {(ay_p.z - ay_m.z) * inv, -(ax_p.z - ax_m.z) * inv,
              (ax_p.y - ax_m.y) * inv - (ay_p.x - ay_m.x) * inv};
    }
  }
  return {};
}

ExternalField ExternalField::perturbed(const RadialFunction& delta) const {
  switch (kind_) {
    case PinchKind::theta:
      return theta_pinch(sum(a_phi_, delta));
    case PinchKind::z:
      return z_pinch(sum(a_3_, delta));
    case PinchKind::general:
      break;
  }
  throw PreconditionError("ExternalField: radial perturbation needs an axisymmetric field");
}

double ExternalField::max_abs_B(double r, int samples) const {
  double m = 0.0;
  for (int i = 0; i <= samples; ++i) {
    const double ri = r * i / samples;
    const int nang = kind_ == PinchKind::general ? 16 : 1;
    for (int k = 0; k < nang; ++k) {
      const double a = 2.0 * std::numbers::pi * k / nang;
      m = std::max(m, norm(B({ri * std::cos(a), ri * std::sin(a)})));
    }
  }
  return m;
}

void ExternalField::validate() const {
  if (kind_ == PinchKind::theta && std::abs(a_phi_(0.0)) > 1e-14)
    throw PreconditionError("ExternalField: A_phi must vanish on the axis");
  if (kind_ == PinchKind::z && std::abs(a_3_(0.0)) > 1e-14)
    throw PreconditionError("ExternalField: A_3 must vanish on the axis");
}

}  // namespace vp25
