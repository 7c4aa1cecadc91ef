#pragma once

#include <cstddef>
#include <vector>

namespace vp25 {

/// Samples of a radial function on the uniform grid r_i = i*dr, i = 0..n-1.
/// Piecewise-linear in between, zero beyond the last sample.
class RadialProfile {
 public:
  RadialProfile() = default;
  RadialProfile(double rmax, std::vector<double> values);

  double operator()(double r) const;

  double dr() const { return dr_; }
  double rmax() const { return rmax_; }
  std::size_t size() const { return values_.size(); }
  double r_at(std::size_t i) const { return static_cast<double>(i) * dr_; }
  const std::vector<double>& values() const { return values_; }

 private:
  double rmax_ = 0.0;
  double dr_ = 0.0;
  std::vector<double> values_;
};

/// Radial potential represented by a C2 cubic spline with U'(0) = 0 and the
/// exact logarithmic tail U(r) = U(rmax) - 2 M ln(r / rmax) beyond rmax.
class RadialPotential {
 public:
  RadialPotential() = default;
  RadialPotential(double rmax, std::vector<double> values, double total_charge);

  double operator()(double r) const;
  double derivative(double r) const;

  double rmax() const { return rmax_; }
  double total_charge() const { return charge_; }
  const std::vector<double>& values() const { return values_; }
  bool empty() const { return values_.empty(); }

 private:
  double rmax_ = 0.0;
  double dr_ = 0.0;
  double charge_ = 0.0;
  std::vector<double> values_;
  std::vector<double> second_;  // spline second derivatives at the knots
};

}  // namespace vp25
