#include "vp25/core/radial_profile.hpp"

#include <cmath>

#include "vp25/core/error.hpp"

namespace vp25 {

RadialProfile::RadialProfile(double rmax, std::vector<double> values)
    : rmax_(rmax), values_(std::move(values)) {
  if (!(rmax > 0.0)) throw PreconditionError("RadialProfile: rmax must be positive");
  if (values_.size() < 2) throw PreconditionError("RadialProfile: need at least two samples");
  dr_ = rmax_ / static_cast<double>(values_.size() - 1);
}

double RadialProfile::operator()(double r) const {
  if (values_.empty() || r > rmax_ || r < 0.0) return 0.0;
  const double s = r / dr_;
  auto i = static_cast<std::size_t>(s);
  if (i >= values_.size() - 1) return values_.back();
  const double a = s - static_cast<double>(i);
  return (1.0 - a) * values_[i] + a * values_[i + 1];
}

RadialPotential::RadialPotential(double rmax, std::vector<double> values, double total_charge)
    : rmax_(rmax), charge_(total_charge), values_(std::move(values)) {
  if (!(rmax > 0.0)) throw PreconditionError("RadialPotential: rmax must be positive");
  const std::size_t n = values_.size();
  if (n < 3) throw PreconditionError("RadialPotential: need at least three samples");
  dr_ = rmax_ / static_cast<double>(n - 1);

  // Clamped spline: U'(0) = 0 by symmetry, U'(rmax) = -2M/rmax from Gauss' law.
  const double d0 = 0.0;
  const double dn = -2.0 * charge_ / rmax_;
  std::vector<double> a(n), b(n), c(n), rhs(n);
  const double h = dr_;
  b[0] = h / 3.0;
  c[0] = h / 6.0;
  rhs[0] = (values_[1] - values_[0]) / h - d0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    a[i] = h / 6.0;
    b[i] = 2.0 * h / 3.0;
    c[i] = h / 6.0;
    rhs[i] = (values_[i + 1] - 2.0 * values_[i] + values_[i - 1]) / h;
  }
  a[n - 1] = h / 6.0;
  b[n - 1] = h / 3.0;
  rhs[n - 1] = dn - (values_[n - 1] - values_[n - 2]) / h;

  // Thomas algorithm
  for (std::size_t i = 1; i < n; ++i) {
    const double m = a[i] / b[i - 1];
    b[i] -= m * c[i - 1];
    rhs[i] -= m * rhs[i - 1];
  }
  second_.assign(n, 0.0);
  second_[n - 1] = rhs[n - 1] / b[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) second_[i] = (rhs[i] - c[i] * second_[i + 1]) / b[i];
}

double RadialPotential::operator()(double r) const {
  if (values_.empty()) return 0.0;
  r = std::abs(r);
  if (r >= rmax_) {
    if (r == rmax_) return values_.back();
    return values_.back() - 2.0 * charge_ * std::log(r / rmax_);
  }
  const double s = r / dr_;
  auto i = static_cast<std::size_t>(s);
  if (i >= values_.size() - 1) i = values_.size() - 2;
  const double B = s - static_cast<double>(i);
  const double A = 1.0 - B;
  const double h2 = dr_ * dr_ / 6.0;
  return A * values_[i] + B * values_[i + 1] +
         ((A * A * A - A) * second_[i] + (B * B * B - B) * second_[i + 1]) * h2;
}

double RadialPotential::derivative(double r) const {
  if (values_.empty()) return 0.0;
  r = std::abs(r);
  if (r >= rmax_) return -2.0 * charge_ / r;
  const double s = r / dr_;
  auto i = static_cast<std::size_t>(s);
  if (i >= values_.size() - 1) i = values_.size() - 2;
  const double B = s - static_cast<double>(i);
  const double A = 1.0 - B;
  return (values_[i + 1] - values_[i]) / dr_ +
         dr_ / 6.0 * (-(3.0 * A * A - 1.0) * second_[i] + (3.0 * B * B - 1.0) * second_[i + 1]);
}

}  // namespace vp25
