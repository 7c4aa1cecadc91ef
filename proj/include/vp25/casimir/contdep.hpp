#pragma once

#include <string>
#include <vector>

#include "vp25/casimir/lattice.hpp"
#include "vp25/fieldsolve/external_field.hpp"
#include "vp25/pusher/field_history.hpp"

namespace vp25 {

/// Integrability exponent paired with gamma > 4: eps = (gamma-4)/6,
/// r = 2(6 + 2 eps)/(gamma - 4), 1/q = 1/2 - 1/r.
double q_from_gamma(double gamma);

/// a = 2 max_s ||p x d_p f||_{L^inf_x L^2_p}, b = 2 max_s ||d_p f||_{L^q_x L^2_p}
struct GradientNorms {
  double a = 0.0;
  double b = 0.0;
  GradientNorms& merge(const GradientNorms& o);  // running max
};

/// Momentum gradients of f(t) = f_init(Z(0, t, .)) by central differences with
/// step fd_step, each offset traced back separately. history may be null at t = 0.
GradientNorms gradient_norms(const PhaseLattice& lattice, const PhaseSampler& f_init,
                             const FieldHistory* history, double t, double q, double fd_step,
                             bool parallel = true);

/// ||B_a - B_b||_{L^2(R^2)} by polar quadrature on [0, r_out].
double field_difference_L2(const ExternalField& a, const ExternalField& b, double r_out, int n_r = 400,
                           int n_angles = 64);

struct ContDepOptions {
  double gamma = 5.0;
  double c = 1.0;
  double fd_step = 0.02;
};

struct ContDepPoint {
  double t = 0.0;
  double lhs = 0.0;     // sum_s ||f1 - f2||_2
  GradientNorms ab;     // running values up to t
  double dB_L1 = 0.0;   // ||B1 - B2||_{L^1(0,t;L^2)}
  double log_rhs = 0.0; // ln a + b c (1+t)^gamma + ln dB_L1 (-inf when the bound is 0)
  double rhs = 0.0;     // exp(log_rhs), +inf on overflow
  double ratio = 0.0;   // lhs / dB_L1, the empirical constant
  bool pass = false;
};

/// sum_s ||f1 - f2||_2 on the lattice.
double lattice_l2_difference(const LatticeValues& f1, const LatticeValues& f2, const PhaseLattice& lattice);

/// Both runs must start from the same initial data (hash check, Error otherwise).
/// dB_L2 is the static ||B1 - B2||_{L^2}; ab holds the running coefficients of run 2.
ContDepPoint contdep_bound(const FieldHistory& run1, const FieldHistory& run2, const PhaseSampler& f_init,
                           const PhaseLattice& lattice, double t, const GradientNorms& ab, double dB_L2,
                           const ContDepOptions& options = {}, bool parallel = true);

void write_contdep_csv(const std::string& path, const std::vector<ContDepPoint>& points);

}  // namespace vp25
