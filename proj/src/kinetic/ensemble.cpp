#include "vp25/kinetic/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>
#include <random>

#include "vp25/core/error.hpp"

namespace vp25 {

kernels::MarkerSpan SpeciesMarkers::span(Species s) {
  return {x.data(), y.data(), px.data(), py.data(), pz.data(), weight.data(), size(), s};
}

double MarkerEnsemble::net_charge() const {
  double q = 0.0;
  for (double w : species[0].weight) q += w;
  for (double w : species[1].weight) q -= w;
  return q;
}

namespace {

struct Candidate {
  double x, y, px, py, pz, f;
};

void permute(std::vector<double>& v, const std::vector<std::size_t>& perm) {
  if (v.empty()) return;
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out[i] = v[perm[i]];
  v.swap(out);
}

SpeciesMarkers sample_species(const PhaseSampler& f_init, const LatticeBox& box, Species s,
                              const LabelFn& labels) {
  if (!(box.x_half > 0.0 && box.p_half > 0.0) || box.n_x < 1 || box.n_p < 1)
    throw PreconditionError("init_ensemble: lattice box must be positive");
  const double hx = 2.0 * box.x_half / box.n_x;
  const double hp = 2.0 * box.p_half / box.n_p;
  std::vector<Vec3> momenta;
  for (int k = 0; k < box.n_p; ++k)
    for (int j = 0; j < box.n_p; ++j)
      for (int i = 0; i < box.n_p; ++i) {
        const Vec3 p{-box.p_half + (i + 0.5) * hp, -box.p_half + (j + 0.5) * hp,
                     -box.p_half + (k + 0.5) * hp};
        if (norm(p) < box.p_half) momenta.push_back(p);
      }
  std::vector<Vec2> positions;
  for (int j = 0; j < box.n_x; ++j)
    for (int i = 0; i < box.n_x; ++i) {
      const Vec2 x{-box.x_half + (i + 0.5) * hx, -box.x_half + (j + 0.5) * hx};
      if (norm(x) < box.x_half) positions.push_back(x);
    }

  std::vector<std::vector<Candidate>> per_position(positions.size());
  const auto np = static_cast<std::ptrdiff_t>(positions.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t a = 0; a < np; ++a) {
    auto& out = per_position[static_cast<std::size_t>(a)];
    const Vec2 x = positions[static_cast<std::size_t>(a)];
    for (const Vec3& p : momenta) {
      const double f = f_init({x, p, s});
      if (f > 0.0) out.push_back({x.x, x.y, p.x, p.y, p.z, f});
    }
  }

  SpeciesMarkers m;
  const double vol = hx * hx * hp * hp * hp;
  for (const auto& list : per_position)
    for (const Candidate& c : list) {
      m.x.push_back(c.x);
      m.y.push_back(c.y);
      m.px.push_back(c.px);
      m.py.push_back(c.py);
      m.pz.push_back(c.pz);
      m.f.push_back(c.f);
      m.vol.push_back(vol);
      m.weight.push_back(c.f * vol);
    }
  if (labels) {
    m.F.resize(m.size());
    m.G.resize(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      const InvariantTriple t = labels(m.point(i, s));
      m.F[i] = t.F;
      m.G[i] = t.G;
    }
  }
  return m;
}

}  // namespace

MarkerEnsemble init_ensemble(const PhaseSampler& f_init, const std::array<LatticeBox, 2>& boxes,
                             std::uint64_t seed, const LabelFn& labels, bool require_nonempty) {
  MarkerEnsemble ens;
  std::mt19937_64 rng(seed);
  for (Species s : kBothSpecies) {
    SpeciesMarkers m = sample_species(f_init, boxes[index_of(s)], s, labels);
    std::vector<std::size_t> perm(m.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto* v : {&m.x, &m.y, &m.px, &m.py, &m.pz, &m.f, &m.vol, &m.weight, &m.F, &m.G})
      permute(*v, perm);
    m.x0 = m.x;
    m.y0 = m.y;
    m.px0 = m.px;
    m.py0 = m.py;
    m.pz0 = m.pz;
    ens[s] = std::move(m);
  }
  if (require_nonempty && ens.total() == 0) throw DegenerateInput("init_ensemble: empty support");
  return ens;
}

std::uint64_t initial_data_hash(const MarkerEnsemble& ens) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](double v) {
    unsigned char b[sizeof(double)];
    std::memcpy(b, &v, sizeof v);
    for (unsigned char c : b) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  for (const auto& m : ens.species) {
    mix(static_cast<double>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
      mix(m.x0[i]);
      mix(m.y0[i]);
      mix(m.px0[i]);
      mix(m.py0[i]);
      mix(m.pz0[i]);
      mix(m.f[i]);
    }
  }
  return h;
}

}  // namespace vp25
