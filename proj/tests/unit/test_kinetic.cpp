#include <doctest.h>

#include <cmath>
#include <numbers>

#include "vp25/core/error.hpp"
#include "vp25/kinetic/diagnostics.hpp"
#include "vp25/kinetic/simulation.hpp"

using namespace vp25;

namespace {

SpeciesMarkers single(Vec2 x, Vec3 p, double f = 1.0, double vol = 1.0) {
  SpeciesMarkers m;
  m.x = m.x0 = {x.x};
  m.y = m.y0 = {x.y};
  m.px = m.px0 = {p.x};
  m.py = m.py0 = {p.y};
  m.pz = m.pz0 = {p.z};
  m.f = {f};
  m.vol = {vol};
  m.weight = {f * vol};
  return m;
}

// smooth blob, charge neutral between the species up to lattice symmetry
double blob(const PhasePoint& z) {
  const double r2 = dot(z.x, z.x) / 0.09;
  const double p2 = dot(z.p, z.p) / 0.16;
  if (r2 >= 1.0 || p2 >= 1.0) return 0.0;
  const double shift = z.species == Species::plus ? 1.0 : 1.0 + 0.3 * z.x.x;
  return shift * (1.0 - r2) * (1.0 - r2) * (1.0 - p2);
}

std::array<LatticeBox, 2> small_boxes() {
  const LatticeBox b{0.3, 16, 0.4, 6};
  return {b, b};
}

Simulation blob_simulation(bool parallel, double T = 0.4) {
  SimulationOptions o;
  o.dt = 0.02;
  o.T = T;
  o.sample_every = 5;
  o.parallel = parallel;
  return Simulation(init_ensemble(blob, small_boxes(), 3), Grid2D::centered(48, 1.0),
                    ExternalField::theta_pinch(polynomial({0.0, 0.5, 0.0, 1.0})), o);
}

}  // namespace

TEST_CASE("empty datum gives an empty ensemble") {
  const MarkerEnsemble e = init_ensemble([](const PhasePoint&) { return 0.0; }, small_boxes(), 1);
  CHECK(e.total() == 0);
  CHECK(lq_norms(e, 2.0)[0] == 0.0);
  CHECK(kinetic_energy(e) == 0.0);
  CHECK_THROWS_AS(init_ensemble([](const PhasePoint&) { return 0.0; }, small_boxes(), 1, {}, true),
                  DegenerateInput);

  SimulationOptions o;
  o.dt = 0.1;
  o.T = 0.5;
  Simulation sim(e, Grid2D::centered(16, 1.0), ExternalField::none(), o);
  sim.run();
  CHECK(sim.time() == doctest::Approx(0.5));
  for (const auto& row : sim.diagnostics()) CHECK(row.H == 0.0);
}

TEST_CASE("constant datum: total weight is c times the lattice volume") {
  const double c = 0.7;
  const LatticeBox b{0.5, 10, 0.6, 8};
  const MarkerEnsemble e = init_ensemble([&](const PhasePoint&) { return c; }, {b, b}, 1);
  const double hx = 2 * b.x_half / b.n_x, hp = 2 * b.p_half / b.n_p;
  int nx = 0, np = 0;
  for (int j = 0; j < b.n_x; ++j)
    for (int i = 0; i < b.n_x; ++i)
      nx += std::hypot(-b.x_half + (i + 0.5) * hx, -b.x_half + (j + 0.5) * hx) < b.x_half;
  for (int k = 0; k < b.n_p; ++k)
    for (int j = 0; j < b.n_p; ++j)
      for (int i = 0; i < b.n_p; ++i)
        np += norm(Vec3{-b.p_half + (i + 0.5) * hp, -b.p_half + (j + 0.5) * hp, -b.p_half + (k + 0.5) * hp}) <
              b.p_half;
  double w = 0.0;
  for (double v : e[Species::plus].weight) w += v;
  CHECK(w == doctest::Approx(c * nx * hx * hx * np * hp * hp * hp).epsilon(1e-12));
  CHECK(e.net_charge() == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("seed only reorders markers") {
  const MarkerEnsemble a = init_ensemble(blob, small_boxes(), 1);
  const MarkerEnsemble b = init_ensemble(blob, small_boxes(), 99);
  REQUIRE(a.total() == b.total());
  auto moments = [](const SpeciesMarkers& m) {
    double s = 0.0, sx = 0.0, sp = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      s += m.weight[i];
      sx += m.weight[i] * m.x[i] * m.x[i];
      sp += m.weight[i] * m.pz[i] * m.pz[i];
    }
    return std::array<double, 3>{s, sx, sp};
  };
  for (Species s : kBothSpecies) {
    const auto ma = moments(a[s]), mb = moments(b[s]);
    for (int k = 0; k < 3; ++k) CHECK(ma[k] == doctest::Approx(mb[k]).epsilon(1e-12));
  }
  CHECK(initial_data_hash(a) == initial_data_hash(init_ensemble(blob, small_boxes(), 1)));
}

TEST_CASE("cloud-in-cell deposition") {
  Grid2D g = Grid2D::centered(8, 1.0);
  const GridGeometry geo = GridGeometry::of(g);
  {
    SpeciesMarkers m = single(g.node(3, 4), {}, 2.0, 0.5);
    std::vector<double> rho(g.node_count(), 0.0);
    kernels::serial::deposit(m.span(Species::plus), geo, rho);
    for (std::size_t k = 0; k < rho.size(); ++k)
      CHECK(rho[k] == doctest::Approx(k == g.index(3, 4) ? 1.0 / (g.h * g.h) : 0.0));
  }
  {
    const Vec2 c = g.node(3, 4) + Vec2{0.5 * g.h, 0.5 * g.h};
    SpeciesMarkers m = single(c, {});
    std::vector<double> rho(g.node_count(), 0.0);
    kernels::serial::deposit(m.span(Species::plus), geo, rho);
    const double q = 0.25 / (g.h * g.h);
    CHECK(rho[g.index(3, 4)] == doctest::Approx(q));
    CHECK(rho[g.index(4, 4)] == doctest::Approx(q));
    CHECK(rho[g.index(3, 5)] == doctest::Approx(q));
    CHECK(rho[g.index(4, 5)] == doctest::Approx(q));
  }
  {
    SpeciesMarkers m = single({0.99, 0.0}, {});
    std::vector<double> rho(g.node_count(), 0.0);
    CHECK_THROWS_AS(kernels::serial::deposit(m.span(Species::minus), geo, rho), MarkerEscape);
  }
}

TEST_CASE("serial and omp particle kernels agree") {
  MarkerEnsemble e = init_ensemble(blob, small_boxes(), 5);
  MarkerEnsemble f = e;
  Grid2D g = Grid2D::centered(48, 1.0);
  const GridGeometry geo = GridGeometry::of(g);
  std::vector<double> ra(g.node_count(), 0.0), rb(g.node_count(), 0.0);
  kernels::serial::deposit(e[Species::plus].span(Species::plus), geo, ra);
  kernels::omp::deposit(f[Species::plus].span(Species::plus), geo, rb);
  for (std::size_t k = 0; k < ra.size(); ++k) CHECK(ra[k] == doctest::Approx(rb[k]).epsilon(1e-13));

  std::vector<double> ex(g.node_count()), ey(g.node_count());
  for (std::size_t k = 0; k < ex.size(); ++k) {
    ex[k] = std::sin(0.01 * static_cast<double>(k));
    ey[k] = std::cos(0.02 * static_cast<double>(k));
  }
  const ExternalField field = ExternalField::theta_pinch(polynomial({0.0, 0.5, 0.0, 1.0}));
  kernels::serial::kick(e[Species::minus].span(Species::minus), geo, ex, ey, field, 0.05);
  kernels::omp::kick(f[Species::minus].span(Species::minus), geo, ex, ey, field, 0.05);
  kernels::serial::drift(e[Species::minus].span(Species::minus), 0.05);
  kernels::omp::drift(f[Species::minus].span(Species::minus), 0.05);
  CHECK(e[Species::minus].px == f[Species::minus].px);
  CHECK(e[Species::minus].x == f[Species::minus].x);
}

TEST_CASE("single marker gyrates in a uniform field without self-field") {
  MarkerEnsemble e;
  e[Species::plus] = single({0.0, 0.0}, {0.3, 0.0, 0.1});
  SimulationOptions o;
  o.dt = 0.5 * std::numbers::pi / 200;
  o.T = 0.5 * std::numbers::pi;
  o.self_field = false;
  o.sample_every = 20;
  // A_phi = r/2 gives Bz = 1
  Simulation sim(std::move(e), Grid2D::centered(32, 1.0), ExternalField::theta_pinch(polynomial({0.0, 0.5})), o);
  sim.run();
  const SpeciesMarkers& m = sim.ensemble()[Species::plus];
  // quarter turn of radius 0.3 about (0, -0.3)
  CHECK(m.px[0] == doctest::Approx(0.0).scale(1.0).epsilon(1e-4));
  CHECK(m.py[0] == doctest::Approx(-0.3).epsilon(1e-4));
  CHECK(m.x[0] == doctest::Approx(0.3).epsilon(1e-4));
  CHECK(m.y[0] == doctest::Approx(-0.3).epsilon(1e-4));
  for (const auto& row : sim.diagnostics()) CHECK(row.P == doctest::Approx(std::hypot(0.3, 0.1)).epsilon(1e-13));
}

TEST_CASE("support extrema and running maxima") {
  MarkerEnsemble e;
  e[Species::minus] = single({0.1, 0.0}, {0.0, 2.0, 0.0});
  const auto ext = support_extrema(e);
  CHECK(ext[0] == doctest::Approx(2.0));
  CHECK(ext[1] == doctest::Approx(0.1));
}

TEST_CASE("T = 0 gives the initial row only") {
  Simulation sim = blob_simulation(true, 0.0);
  sim.run();
  REQUIRE(sim.diagnostics().size() == 1);
  CHECK(sim.diagnostics()[0].t == 0.0);
}

TEST_CASE("conservation on a short self-consistent run") {
  Simulation sim = blob_simulation(true);
  sim.run();
  const auto& rows = sim.diagnostics();
  REQUIRE(rows.size() >= 3);
  const auto& r0 = rows.front();
  for (const auto& r : rows) {
    CHECK(r.M == r0.M);
    for (int s = 0; s < 2; ++s) {
      CHECK(r.l1[s] == r0.l1[s]);
      CHECK(r.l2[s] == r0.l2[s]);
      CHECK(r.linf[s] == r0.linf[s]);
      CHECK(r.rho_l1[s] == doctest::Approx(r0.rho_l1[s]).epsilon(1e-12));
    }
    CHECK(std::abs(r.H - r0.H) < 1e-3 * std::abs(r0.H));
    CHECK(r.P >= r0.P);
    CHECK(r.X >= r0.X);
  }
}

TEST_CASE("runs are reproducible and serial matches omp") {
  Simulation a = blob_simulation(true);
  Simulation b = blob_simulation(true);
  Simulation c = blob_simulation(false);
  a.run();
  b.run();
  c.run();
  const auto& ra = a.diagnostics();
  const auto& rb = b.diagnostics();
  const auto& rc = c.diagnostics();
  REQUIRE(ra.size() == rb.size());
  for (std::size_t k = 0; k < ra.size(); ++k) {
    CHECK(ra[k].H == rb[k].H);
    CHECK(ra[k].P == rb[k].P);
    CHECK(ra[k].H == doctest::Approx(rc[k].H).epsilon(1e-10));
  }
}

TEST_CASE("stable step bound") {
  CHECK(stable_dt(2.0, 0.1, 0.5) == doctest::Approx(0.05));
  CHECK(stable_dt(10.0, 0.1, 0.5) == doctest::Approx(0.02));
}
