#include <doctest.h>

#include <cmath>
#include <memory>
#include <numbers>

#include "vp25/casimir/casimir_spec.hpp"
#include "vp25/casimir/contdep.hpp"
#include "vp25/casimir/lattice.hpp"
#include "vp25/casimir/stability.hpp"
#include "vp25/core/error.hpp"
#include "vp25/harness/builders.hpp"

using namespace vp25;

namespace {

// theta(E) = 1 - E on [0, 1], psi = 1
AnsatzPair linear_ansatz() {
  AnsatzPair a;
  for (SpeciesAnsatz* sp : {&a.plus, &a.minus}) {
    sp->theta.shape = EnergyShape::linear;
    sp->theta.kappa = 1.0;
    sp->theta.E_max = 1.0;
    sp->theta.tail = false;
    sp->psi.sigma_shape = SigmaShape::flat;
    sp->psi.amp = 1.0;
    sp->psi.mu_width = 1e6;
  }
  return a;
}

RadialSteadyState disk_state(double rmax, int n) {
  // U0 of the unit disk with the U0(0) = 0 normalisation
  RadialSteadyState st;
  st.rmax = rmax;
  st.M = 1.0;
  for (int i = 0; i < n; ++i) {
    const double r = rmax * i / (n - 1);
    st.r.push_back(r);
    st.U0.push_back(r <= 1.0 ? -r * r : -1.0 - 2.0 * std::log(r));
    st.rho_plus.push_back(r <= 1.0 ? 1.0 / std::numbers::pi : 0.0);
    st.rho_minus.push_back(0.0);
  }
  return st;
}

struct Fixture {
  Config cfg = Config::defaults();
  std::shared_ptr<SteadyStateModel> model;
  CasimirSpec spec;
  std::unique_ptr<PhaseLattice> lattice;

  Fixture() {
    cfg.set_flag("steady.n_r", "151");
    const AnsatzPair a = build_ansatz(cfg);
    const ExternalField f = build_field(cfg);
    const RadialSteadyState st = fixed_point_solve(a, f, build_fixed_point_options(cfg));
    REQUIRE(st.converged);
    model = std::make_shared<SteadyStateModel>(st, a, f);
    spec = build_casimir_spec(*model);
    lattice = std::make_unique<PhaseLattice>(build_lattice_spec(cfg), *model);
  }

  LatticeValues datum(double eps) const {
    const BumpPair g = build_bump_pair(cfg, steady_peak(*model));
    return lattice->evaluate(perturbed_datum(model, g, eps), false);
  }
  RhsBreakdown rhs(const LatticeValues& v) const {
    return stability_rhs(v, *lattice, spec, XiFunction(model->state()), model->state().R);
  }
};

}  // namespace

TEST_CASE("theta inverse on the linear profile") {
  const AnsatzPair a = linear_ansatz();
  const ThetaInverse inv(a.plus.theta, 0.0);
  CHECK(inv.theta_max() == doctest::Approx(1.0));
  CHECK(inv(0.25) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(inv(0.0) == 1.0);
  CHECK(inv(1.0) == 0.0);
  CHECK(inv.integral(0.5) == doctest::Approx(0.375).epsilon(1e-12));
  CHECK_THROWS_AS(inv(1.5), PreconditionError);
  double prev = 2.0;
  for (double s = 0.0; s <= 1.0; s += 0.01) {
    CHECK(inv(s) <= prev);
    prev = inv(s);
  }
}

TEST_CASE("Casimir integrand closed-form values") {
  const CasimirSpec spec(linear_ansatz(), {0.0, 0.0}, 1.0, 2.0);
  CHECK(spec.phi(0.5, -1.0, 0.0, Species::plus) == doctest::Approx(-0.375).epsilon(1e-12));
  CHECK(spec.phi(3.0, 1.0, 0.0, Species::plus) == doctest::Approx(9.0));
  for (double sigma : {-1.0, 0.0, 2.0}) CHECK(spec.phi(0.0, sigma, 0.3, Species::minus) == 0.0);
  CHECK_THROWS_AS(spec.phi(-0.1, -1.0, 0.0, Species::plus), PreconditionError);
  CHECK(spec[Species::plus].c_theta == doctest::Approx(1.0));
}

TEST_CASE("Casimir integrand is C1 and convex on the negative branch") {
  Fixture fx;
  const CasimirSpec& spec = fx.spec;
  for (Species s : kBothSpecies) {
    const double sigma = -charge_sign(s) * 0.2;
    const double mu = 0.1;
    const double psi = spec.psi(sigma, mu, s);
    REQUIRE(psi > 0.0);
    const double tj = spec[s].theta_max * psi;
    const double h = 1e-6 * tj;
    const double left = (spec.phi(tj, sigma, mu, s) - spec.phi(tj - h, sigma, mu, s)) / h;
    const double right = (spec.phi(tj + h, sigma, mu, s) - spec.phi(tj, sigma, mu, s)) / h;
    CHECK(left == doctest::Approx(right).epsilon(1e-4));
    const double c_theta = spec[s].c_theta;
    const double c_pm = spec[s].c_pm;
    for (double x = 0.05; x < 2.0; x += 0.05) {
      const double tau = x * tj;
      const double d = 1e-3 * tj;
      const double second =
          (spec.phi(tau + d, sigma, mu, s) - 2 * spec.phi(tau, sigma, mu, s) + spec.phi(tau - d, sigma, mu, s)) /
          (d * d);
      CHECK(second >= c_theta / psi * (1.0 - 1e-3));
      const double slope = spec.phi_tau(tau, sigma, mu, s);
      const double fd = (spec.phi(tau + d, sigma, mu, s) - spec.phi(tau - d, sigma, mu, s)) / (2 * d);
      CHECK(slope == doctest::Approx(fd).epsilon(1e-5));
      CHECK(std::abs(slope) <= c_pm * (1.0 + tau / psi));
    }
  }
}

TEST_CASE("xi of the disk potential") {
  const RadialSteadyState st = disk_state(1.5, 301);
  const XiFunction xi(st);
  CHECK(xi(0.5) == doctest::Approx(0.25).epsilon(1e-4));
  CHECK(xi(2.0) == doctest::Approx(1.0 + 2.0 * std::log(2.0)).epsilon(1e-6));
  double prev = 0.0;
  for (double r = 0.0; r < 3.0; r += 0.01) {
    CHECK(xi(r) >= prev);
    prev = xi(r);
  }
  RadialSteadyState zero = disk_state(1.5, 31);
  for (double& u : zero.U0) u = 0.0;
  zero.M = 0.0;
  CHECK(xi(0.0) == 0.0);
  CHECK(XiFunction(zero)(2.0) == 0.0);
}

TEST_CASE("r0 scans") {
  RadialSteadyState st = disk_state(2.0, 201);
  for (double& u : st.U0) u = 0.0;
  st.M = 0.0;
  const ExternalField linear = ExternalField::theta_pinch(polynomial({0.0, 1.0}));
  CHECK(compute_r0(st, linear) == 0.0);
  // |U0| = 1/2 beyond a short ramp: sqrt(2 |U0|) = 1 so r0 = 1
  for (std::size_t i = 0; i < st.r.size(); ++i) st.U0[i] = -0.5 * std::min(1.0, std::pow(st.r[i] / 0.1, 2));
  CHECK(compute_r0(st, linear) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS(compute_r0(st, ExternalField::none()));
}

TEST_CASE("Casimir of an empty ensemble is zero") {
  const CasimirSpec spec(linear_ansatz(), {0.0, 0.0}, 1.0, 2.0);
  CHECK(casimir_functional(MarkerEnsemble{}, spec) == 0.0);
}

TEST_CASE("stability terms vanish at the steady state") {
  Fixture fx;
  const LatticeValues f0 = fx.lattice->steady_values();
  const RhsBreakdown r = fx.rhs(f0);
  CHECK(r.total() == 0.0);
  CHECK(r.degenerate);
  CHECK(stability_lhs(f0, *fx.lattice, fx.spec) == 0.0);
  CHECK(l2_distance_sq(f0, *fx.lattice) == 0.0);
  CHECK(energy_casimir_gap(f0, *fx.lattice, fx.spec) == doctest::Approx(0.0).scale(1e-20));
}

TEST_CASE("perturbation scaling and the energy-Casimir sandwich") {
  Fixture fx;
  const LatticeValues a = fx.datum(0.01), b = fx.datum(0.02);
  const double la = stability_lhs(a, *fx.lattice, fx.spec);
  const double lb = stability_lhs(b, *fx.lattice, fx.spec);
  CHECK(la > 0.0);
  CHECK(std::log2(lb / la) == doctest::Approx(2.0).epsilon(0.02));
  const RhsBreakdown ra = fx.rhs(a), rb = fx.rhs(b);
  CHECK_FALSE(ra.degenerate);
  CHECK(rb.total() / ra.total() == doctest::Approx(2.0).epsilon(0.15));
  const double gap = energy_casimir_gap(a, *fx.lattice, fx.spec);
  CHECK(la <= gap);
  CHECK(gap <= ra.total());
  CHECK(l2_distance_sq(a, *fx.lattice) <= remark_constant(fx.spec) * ra.braces());
}

TEST_CASE("charged perturbation is rejected") {
  Fixture fx;
  BumpPair g = build_bump_pair(fx.cfg, steady_peak(*fx.model));
  g.minus.amp = 0.0;
  const LatticeValues v = fx.lattice->evaluate(perturbed_datum(fx.model, g, 0.05), false);
  CHECK_THROWS_AS(fx.rhs(v), Error);
}

TEST_CASE("serial and omp lattice evaluation agree") {
  Fixture fx;
  const PhaseSampler f = perturbed_datum(fx.model, build_bump_pair(fx.cfg, steady_peak(*fx.model)), 0.03);
  const LatticeValues s = fx.lattice->evaluate(f, false);
  const LatticeValues o = fx.lattice->evaluate(f, true);
  CHECK(s[0] == o[0]);
  CHECK(s[1] == o[1]);
}

TEST_CASE("q from gamma and field differences") {
  // eps = 1/6, r = 38/3, 1/q = 1/2 - 3/38
  CHECK(q_from_gamma(5.0) == doctest::Approx(1.0 / (0.5 - 3.0 / 38.0)));
  CHECK_THROWS(q_from_gamma(4.0));
  const ExternalField a = ExternalField::theta_pinch(polynomial({0.0, 0.5}));
  CHECK(field_difference_L2(a, a, 1.0) == 0.0);
  // delta r / 2 added to A_phi shifts Bz by delta everywhere
  const ExternalField b = a.perturbed(polynomial({0.0, 0.005}));
  CHECK(field_difference_L2(a, b, 1.0) == doctest::Approx(0.01 * std::sqrt(std::numbers::pi)).epsilon(1e-6));
}

TEST_CASE("bump pair carries equal mass") {
  Fixture fx;
  const BumpPair g = build_bump_pair(fx.cfg, 1.0);
  CHECK(g.plus.mass() == doctest::Approx(g.minus.mass()).epsilon(1e-12));
  // brute-force midpoint sum over the bump's box for the plus mass
  const PhaseBump& b = g.plus;
  const int n = 16;
  double acc = 0.0;
  const double xr = b.r + b.w_r, dx = 2.0 * xr / 60, dp = 2.0 * b.w_p / n;
  for (int i = 0; i < 60; ++i)
    for (int j = 0; j < 60; ++j) {
      const Vec2 x{-xr + (i + 0.5) * dx, -xr + (j + 0.5) * dx};
      const double r = norm(x);
      if (std::abs(r - b.r) >= b.w_r) continue;
      const Vec2 e_r{x.x / r, x.y / r}, e_phi{-x.y / r, x.x / r};
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          for (int m = 0; m < n; ++m) {
            const double pr = b.p_r - b.w_p + (k + 0.5) * dp;
            const double pphi = b.p_phi - b.w_p + (l + 0.5) * dp;
            const double p3 = b.p_3 - b.w_p + (m + 0.5) * dp;
            const Vec3 p{pr * e_r.x + pphi * e_phi.x, pr * e_r.y + pphi * e_phi.y, p3};
            acc += b({x, p, Species::plus});
          }
    }
  CHECK(acc * dx * dx * dp * dp * dp == doctest::Approx(b.mass()).epsilon(2e-2));
}
