#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "vp25/core/error.hpp"
#include "vp25/kernels/backward.hpp"
#include "vp25/pusher/field_history.hpp"
#include "vp25/pusher/pusher.hpp"

using namespace vp25;

namespace {

const EFieldFn kNoE = [](Vec2) { return Vec2{}; };
const BFieldFn kNoB = [](Vec2) { return Vec3{}; };
const BFieldFn kUnitBz = [](Vec2) { return Vec3{0.0, 0.0, 1.0}; };

RadialPotential zero_potential() { return RadialPotential(1.0, std::vector<double>(11, 0.0), 0.0); }

// smooth nonuniform test fields
Vec2 test_E(Vec2 x) { return {0.3 * std::sin(2.0 * x.y) - 0.2 * x.x, 0.1 * x.x * x.y + 0.05}; }

std::array<double, 5> flat(const PhasePoint& z) { return {z.x.x, z.x.y, z.p.x, z.p.y, z.p.z}; }

}  // namespace

TEST_CASE("free streaming") {
  const PhasePoint z{{0.0, 0.0}, {1.0, 0.0, 0.0}, Species::plus};
  const PhasePoint w = boris_step(z, kNoE, kNoB, 0.1);
  CHECK(w.x.x == doctest::Approx(0.1));
  CHECK(w.x.y == 0.0);
  CHECK(w.p.x == 1.0);
  CHECK(w.p.y == 0.0);
}

TEST_CASE("gyration a quarter turn in a unit Bz") {
  PhasePoint z{{0.0, 0.0}, {1.0, 0.0, 0.0}, Species::plus};
  const int n = 2000;
  const double dt = 0.5 * std::numbers::pi / n;
  for (int k = 0; k < n; ++k) {
    z = boris_step(z, kNoE, kUnitBz, dt);
    CHECK(std::abs(norm(z.p) - 1.0) < 1e-13);
  }
  CHECK(z.p.x == doctest::Approx(0.0).scale(1.0).epsilon(1e-6));
  CHECK(z.p.y == doctest::Approx(-1.0).epsilon(1e-6));
}

TEST_CASE("uniform acceleration of the minus species") {
  PhasePoint z{{0.0, 0.0}, {0.5, 0.0, 0.2}, Species::minus};
  const EFieldFn E = [](Vec2) { return Vec2{1.0, 0.0}; };
  for (int k = 0; k < 10; ++k) z = boris_step(z, E, kNoB, 0.1);
  CHECK(z.p.x == doctest::Approx(0.5 - 1.0));
  CHECK(z.p.z == 0.2);
}

TEST_CASE("negative dt inverts the step") {
  const PhasePoint z{{0.1, -0.2}, {0.3, 0.4, -0.1}, Species::minus};
  const BFieldFn B = [](Vec2 x) { return Vec3{0.1 * x.y, -0.2, 1.0 + x.x * x.x}; };
  const PhasePoint w = boris_step(boris_step(z, test_E, B, 0.05), test_E, B, -0.05);
  CHECK(w.x.x == doctest::Approx(z.x.x).epsilon(1e-14));
  CHECK(w.x.y == doctest::Approx(z.x.y).epsilon(1e-14));
  CHECK(w.p.x == doctest::Approx(z.p.x).epsilon(1e-14));
  CHECK(w.p.z == doctest::Approx(z.p.z).epsilon(1e-14));
}

TEST_CASE("non-finite field is an error") {
  const PhasePoint z{{0.1, 0.0}, {0.0, 0.0, 0.0}, Species::plus};
  const EFieldFn bad = [](Vec2) { return Vec2{std::nan(""), 0.0}; };
  CHECK_THROWS_AS(boris_step(z, bad, kNoB, 0.1), Error);
}

TEST_CASE("phase volume is preserved by one step") {
  const PhasePoint z{{0.2, -0.1}, {0.3, 0.1, 0.4}, Species::plus};
  const BFieldFn B = [](Vec2 x) { return Vec3{0.0, 0.0, 1.0 + 0.5 * x.x}; };
  const double dt = 0.1, e = 1e-6;
  // 5x5 Jacobian by central differences
  double J[5][5];
  for (int c = 0; c < 5; ++c) {
    auto shifted = [&](double s) {
      PhasePoint y = z;
      double* comp[5] = {&y.x.x, &y.x.y, &y.p.x, &y.p.y, &y.p.z};
      *comp[c] += s;
      return flat(boris_step(y, test_E, B, dt));
    };
    const auto a = shifted(e), b = shifted(-e);
    for (int r = 0; r < 5; ++r) J[r][c] = (a[r] - b[r]) / (2.0 * e);
  }
  // Gaussian elimination for the determinant
  double det = 1.0;
  for (int k = 0; k < 5; ++k) {
    int piv = k;
    for (int r = k + 1; r < 5; ++r)
      if (std::abs(J[r][k]) > std::abs(J[piv][k])) piv = r;
    if (piv != k) {
      for (int c = 0; c < 5; ++c) std::swap(J[k][c], J[piv][c]);
      det = -det;
    }
    det *= J[k][k];
    for (int r = k + 1; r < 5; ++r) {
      const double f = J[r][k] / J[k][k];
      for (int c = k; c < 5; ++c) J[r][c] -= f * J[k][c];
    }
  }
  CHECK(det == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("invariants at a simple point") {
  const PhasePoint z{{1.0, 0.0}, {0.0, 1.0, 0.0}, Species::plus};
  const InvariantTriple a = invariants(z, zero_potential(), ExternalField::none());
  CHECK(a.E == doctest::Approx(0.5));
  CHECK(a.F == doctest::Approx(1.0));
  CHECK(a.G == 0.0);
  const InvariantTriple b = invariants(z, zero_potential(), ExternalField::theta_pinch(polynomial({0.0, 1.0})));
  CHECK(b.F == doctest::Approx(2.0));
  const PhasePoint axis{{0.0, 0.0}, {0.3, 0.2, 0.1}, Species::minus};
  CHECK(invariants(axis, zero_potential(), ExternalField::theta_pinch(polynomial({0.0, 1.0}))).F == 0.0);
}

TEST_CASE("invariant drift is second order in dt") {
  // static axisymmetric fields: U0 = -0.3 r^2, theta pinch A_phi = 0.5 r + r^3
  std::vector<double> u(201);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double r = 2.0 * static_cast<double>(i) / 200.0;
    u[i] = -0.3 * r * r;
  }
  const RadialPotential U(2.0, u, 0.0);
  const ExternalField field = ExternalField::theta_pinch(polynomial({0.0, 0.5, 0.0, 1.0}));
  const EFieldFn E = [&](Vec2 x) { return radial_field(U, x); };
  const BFieldFn B = [&](Vec2 x) { return field.B(x); };
  auto drift = [&](double dt) {
    PhasePoint z{{0.3, 0.1}, {0.2, -0.3, 0.1}, Species::plus};
    const InvariantTriple i0 = invariants(z, U, field);
    std::array<double, 3> worst{};
    const int n = static_cast<int>(std::lround(4.0 / dt));
    for (int k = 0; k < n; ++k) {
      z = boris_step(z, E, B, dt);
      const InvariantTriple i = invariants(z, U, field);
      worst[0] = std::max(worst[0], std::abs(i.E - i0.E));
      worst[1] = std::max(worst[1], std::abs(i.F - i0.F));
      worst[2] = std::max(worst[2], std::abs(i.G - i0.G));
    }
    return worst;
  };
  const auto a = drift(0.02), b = drift(0.01);
  for (int c = 0; c < 2; ++c) CHECK(a[c] / b[c] == doctest::Approx(4.0).epsilon(0.25));
  CHECK(b[2] < 1e-14);
}

TEST_CASE("field history round trip and backward evaluation") {
  Grid2D g = Grid2D::centered(32, 1.0);
  const GridGeometry geo = GridGeometry::of(g);
  const double dt = 0.02;
  const ExternalField field = ExternalField::theta_pinch(polynomial({0.0, 1.0}));
  FieldHistory hist(geo, dt, field, 0.0, 42);
  const int steps = 50;
  for (int k = 0; k < steps; ++k) {
    std::vector<double> ex(g.node_count()), ey(g.node_count());
    for (int j = 0; j <= g.ny; ++j)
      for (int i = 0; i <= g.nx; ++i) {
        const Vec2 e = test_E(g.node(i, j));
        ex[g.index(i, j)] = e.x * (1.0 + 0.01 * k);
        ey[g.index(i, j)] = e.y;
      }
    hist.push_step(std::move(ex), std::move(ey));
  }
  CHECK(hist.final_time() == doctest::Approx(steps * dt));

  const PhasePoint z0{{0.1, 0.2}, {0.2, -0.1, 0.3}, Species::plus};
  PhasePoint z = z0;
  const BFieldFn B = [&](Vec2 x) { return field.B(x); };
  for (int k = 0; k < steps; ++k) {
    const EFieldFn E = [&, k](Vec2 x) { return hist.E_step(static_cast<std::size_t>(k), x); };
    z = boris_step(z, E, B, dt);
  }
  const PhasePoint back = hist.trace_back(z, steps * dt);
  CHECK(back.x.x == doctest::Approx(z0.x.x).epsilon(1e-12));
  CHECK(back.x.y == doctest::Approx(z0.x.y).epsilon(1e-12));
  CHECK(back.p.z == doctest::Approx(z0.p.z).epsilon(1e-12));

  const PhaseSampler bump = [](const PhasePoint& q) { return std::exp(-dot(q.x, q.x) - dot(q.p, q.p)); };
  CHECK(backward_evaluate(bump, hist, 0.0, z0) == bump(z0));
  CHECK(backward_evaluate(bump, hist, steps * dt, z) == doctest::Approx(bump(z0)).epsilon(1e-12));
  CHECK(backward_evaluate([](const PhasePoint&) { return 0.0; }, hist, 0.5, z0) == 0.0);
  CHECK_THROWS_AS(hist.trace_back(z, steps * dt + 0.1), PreconditionError);

  // partial steps stay consistent with the serial and omp kernels
  std::vector<PhasePoint> pts{z0, z, {{-0.3, 0.1}, {0.0, 0.2, 0.0}, Species::minus}};
  std::vector<double> s, o;
  kernels::serial::backward_values(pts, bump, hist, 0.37, s);
  kernels::omp::backward_values(pts, bump, hist, 0.37, o);
  CHECK(s == o);
}
