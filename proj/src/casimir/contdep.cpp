#include "vp25/casimir/contdep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "vp25/core/error.hpp"
#include "vp25/kernels/backward.hpp"

namespace vp25 {

double q_from_gamma(double gamma) {
  if (!(gamma > 4.0)) throw PreconditionError("q_from_gamma: gamma must exceed 4");
  const double eps = (gamma - 4.0) / 6.0;
  const double r = 2.0 * (6.0 + 2.0 * eps) / (gamma - 4.0);
  return 1.0 / (0.5 - 1.0 / r);
}

GradientNorms& GradientNorms::merge(const GradientNorms& o) {
  a = std::max(a, o.a);
  b = std::max(b, o.b);
  return *this;
}

GradientNorms gradient_norms(const PhaseLattice& lattice, const PhaseSampler& f_init,
                             const FieldHistory* history, double t, double q, double h, bool parallel) {
  if (!(h > 0.0)) throw PreconditionError("gradient_norms: fd_step must be positive");
  if (t > 0.0 && !history) throw PreconditionError("gradient_norms: history required for t > 0");
  GradientNorms out;
  const int nx = lattice.x_nodes();
  for (Species s : kBothSpecies) {
    const SpeciesLattice& L = lattice[s];
    const std::size_t n = L.size();
    std::vector<PhasePoint> shifted(6 * n);
    for (std::size_t i = 0; i < n; ++i)
      for (int k = 0; k < 3; ++k)
        for (int sign = 0; sign < 2; ++sign) {
          PhasePoint z = L.points[i];
          double* comp = k == 0 ? &z.p.x : (k == 1 ? &z.p.y : &z.p.z);
          *comp += sign == 0 ? h : -h;
          shifted[6 * i + 2 * static_cast<std::size_t>(k) + static_cast<std::size_t>(sign)] = z;
        }
    std::vector<double> v(shifted.size());
    if (t == 0.0) {
      const auto m = static_cast<std::ptrdiff_t>(shifted.size());
#pragma omp parallel for schedule(static) if (parallel)
      for (std::ptrdiff_t i = 0; i < m; ++i) v[i] = f_init(shifted[i]);
    } else if (parallel) {
      kernels::omp::backward_values(shifted, f_init, *history, t, v);
    } else {
      kernels::serial::backward_values(shifted, f_init, *history, t, v);
    }
    std::vector<double> cross_sq(static_cast<std::size_t>(nx), 0.0), grad_sq(static_cast<std::size_t>(nx), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const Vec3 g{(v[6 * i] - v[6 * i + 1]) / (2 * h), (v[6 * i + 2] - v[6 * i + 3]) / (2 * h),
                   (v[6 * i + 4] - v[6 * i + 5]) / (2 * h)};
      const Vec3 c = cross(L.points[i].p, g);
      const auto x = static_cast<std::size_t>(L.x_node[i]);
      cross_sq[x] += dot(c, c) * lattice.p_weight();
      grad_sq[x] += dot(g, g) * lattice.p_weight();
    }
    double a = 0.0, bq = 0.0;
    for (int x = 0; x < nx; ++x) {
      a = std::max(a, std::sqrt(cross_sq[static_cast<std::size_t>(x)]));
      bq += std::pow(std::sqrt(grad_sq[static_cast<std::size_t>(x)]), q) * lattice.x_weight(x);
    }
    out.merge({2.0 * a, 2.0 * std::pow(bq, 1.0 / q)});
  }
  return out;
}

double field_difference_L2(const ExternalField& a, const ExternalField& b, double r_out, int n_r, int n_angles) {
  if (!(r_out > 0.0) || n_r < 1 || n_angles < 1) throw PreconditionError("field_difference_L2: bad quadrature");
  const double dr = r_out / n_r;
  const double dphi = 2.0 * std::numbers::pi / n_angles;
  double acc = 0.0;
  for (int j = 0; j < n_r; ++j) {
    const double r = (j + 0.5) * dr;
    for (int k = 0; k < n_angles; ++k) {
      const double phi = (k + 0.5) * dphi;
      const Vec2 x{r * std::cos(phi), r * std::sin(phi)};
      const Vec3 d = a.B(x) - b.B(x);
      acc += dot(d, d) * r * dr * dphi;
    }
  }
  return std::sqrt(acc);
}

double lattice_l2_difference(const LatticeValues& f1, const LatticeValues& f2, const PhaseLattice& lattice) {
  double total = 0.0;
  for (Species s : kBothSpecies) {
    const int si = index_of(s);
    const SpeciesLattice& L = lattice[s];
    if (f1[si].size() != L.size() || f2[si].size() != L.size())
      throw PreconditionError("lattice_l2_difference: values do not match the lattice");
    double acc = 0.0;
    for (std::size_t i = 0; i < L.size(); ++i) {
      const double d = f1[si][i] - f2[si][i];
      acc += d * d * L.weight[i];
    }
    total += std::sqrt(acc);
  }
  return total;
}

ContDepPoint contdep_bound(const FieldHistory& run1, const FieldHistory& run2, const PhaseSampler& f_init,
                           const PhaseLattice& lattice, double t, const GradientNorms& ab, double dB_L2,
                           const ContDepOptions& opt, bool parallel) {
  if (run1.initial_data_hash() != run2.initial_data_hash())
    throw Error("contdep_bound: the two runs start from different initial data");
  ContDepPoint out;
  out.t = t;
  out.ab = ab;
  const LatticeValues f1 = lattice.evaluate_backward(f_init, run1, t, parallel);
  const LatticeValues f2 = lattice.evaluate_backward(f_init, run2, t, parallel);
  out.lhs = lattice_l2_difference(f1, f2, lattice);
  out.dB_L1 = t * dB_L2;
  if (ab.a > 0.0 && out.dB_L1 > 0.0) {
    out.log_rhs = std::log(ab.a) + ab.b * opt.c * std::pow(1.0 + t, opt.gamma) + std::log(out.dB_L1);
    out.rhs = out.log_rhs > 700.0 ? std::numeric_limits<double>::infinity() : std::exp(out.log_rhs);
  } else {
    out.log_rhs = -std::numeric_limits<double>::infinity();
    out.rhs = 0.0;
  }
  out.ratio = out.dB_L1 > 0.0 ? out.lhs / out.dB_L1 : 0.0;
  out.pass = out.lhs == 0.0 || std::log(out.lhs) <= out.log_rhs;
  return out;
}

void write_contdep_csv(const std::string& path, const std::vector<ContDepPoint>& points) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw Error("write_contdep_csv: cannot open " + path);
  std::fprintf(f, "t,lhs,a,b,dB_L1,log_rhs,rhs,ratio,pass\n");
  for (const auto& p : points)
    std::fprintf(f, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%d\n", p.t, p.lhs, p.ab.a, p.ab.b, p.dB_L1,
                 p.log_rhs, p.rhs, p.ratio, p.pass ? 1 : 0);
  std::fclose(f);
}

}  // namespace vp25
