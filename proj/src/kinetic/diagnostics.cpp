#include "vp25/kinetic/diagnostics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <set>

#include "vp25/core/error.hpp"

namespace vp25 {

std::array<double, 2> lq_norms(const MarkerEnsemble& ens, double q) {
  if (!(q >= 1.0)) throw PreconditionError("lq_norms: q must be at least 1");
  std::array<double, 2> out{};
  for (Species s : kBothSpecies) {
    const SpeciesMarkers& m = ens[s];
    double acc = 0.0;
    if (std::isinf(q)) {
      for (double f : m.f) acc = std::max(acc, f);
    } else {
      for (std::size_t i = 0; i < m.size(); ++i) acc += std::pow(m.f[i], q) * m.vol[i];
      acc = std::pow(acc, 1.0 / q);
    }
    out[index_of(s)] = acc;
  }
  return out;
}

std::array<double, 2> support_extrema(const MarkerEnsemble& ens) {
  double P = 0.0, X = 0.0;
  for (const auto& m : ens.species)
    for (std::size_t i = 0; i < m.size(); ++i) {
      P = std::max(P, m.px[i] * m.px[i] + m.py[i] * m.py[i] + m.pz[i] * m.pz[i]);
      X = std::max(X, m.x[i] * m.x[i] + m.y[i] * m.y[i]);
    }
  return {std::sqrt(P), std::sqrt(X)};
}

double kinetic_energy(const MarkerEnsemble& ens) {
  double e = 0.0;
  for (const auto& m : ens.species)
    for (std::size_t i = 0; i < m.size(); ++i)
      e += 0.5 * m.weight[i] * (m.px[i] * m.px[i] + m.py[i] * m.py[i] + m.pz[i] * m.pz[i]);
  return e;
}

void write_diagnostics_csv(const std::string& path, const std::vector<DiagnosticsRow>& rows) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw Error("write_diagnostics_csv: cannot open " + path);
  std::set<std::string> keys;
  for (const auto& r : rows)
    for (const auto& [k, v] : r.extra) keys.insert(k);
  std::fprintf(f,
               "t,H,Ekin,Epot,Casimir,P,X,M,L1_plus,L1_minus,L2_plus,L2_minus,Linf_plus,Linf_minus,"
               "rhoL1_plus,rhoL1_minus");
  for (const auto& k : keys) std::fprintf(f, ",%s", k.c_str());
  std::fprintf(f, "\n");
  for (const auto& r : rows) {
    std::fprintf(f, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g", r.t, r.H, r.Ekin, r.Epot,
                 r.casimir, r.P, r.X, r.M);
    for (int s = 0; s < 2; ++s) std::fprintf(f, ",%.17g", r.l1[s]);
    for (int s = 0; s < 2; ++s) std::fprintf(f, ",%.17g", r.l2[s]);
    for (int s = 0; s < 2; ++s) std::fprintf(f, ",%.17g", r.linf[s]);
    for (int s = 0; s < 2; ++s) std::fprintf(f, ",%.17g", r.rho_l1[s]);
    for (const auto& k : keys) {
      auto it = r.extra.find(k);
      if (it == r.extra.end())
        std::fprintf(f, ",");
      else
        std::fprintf(f, ",%.17g", it->second);
    }
    std::fprintf(f, "\n");
  }
  std::fclose(f);
}

}  // namespace vp25
