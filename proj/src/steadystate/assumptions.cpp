#include "vp25/steadystate/assumptions.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace vp25 {

namespace {

std::string fmt(const char* label, double v) {
  std::ostringstream os;
  os.precision(6);
  os << label << v;
  return os.str();
}

double required_potential(const AnsatzPair& a, PinchKind kind, double r) {
  double req = 0.0;
  for (Species s : kBothSpecies) {
    const SpeciesAnsatz& sa = a[s];
    if (sa.psi.trivial()) continue;
    const double base = std::sqrt(2.0 * sa.theta.E_max +
                                  4.0 * std::numbers::pi * std::numbers::pi * sa.eta_star_l1() * r * r);
    const double extra = kind == PinchKind::z ? std::abs(sa.psi.G0) : 0.0;
    req = std::max(req, extra + base);
  }
  return req;
}

}  // namespace

bool CertificateReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const AssumptionCheck* CertificateReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string CertificateReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) os << c.name << ": " << (c.pass ? "pass" : "FAIL") << "  " << c.detail << "\n";
  return os.str();
}

std::vector<double> confinement_margin(const AnsatzPair& ansatz, const ExternalField& field,
                                       const std::vector<double>& r) {
  std::vector<double> m(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double A = field.kind() == PinchKind::z ? field.A_3(r[i]) : field.A_phi(r[i]);
    m[i] = A - required_potential(ansatz, field.kind(), r[i]);
  }
  return m;
}

CertificateReport check_assumptions(const AnsatzPair& a, const ExternalField& field,
                                    const AssumptionOptions& opt) {
  CertificateReport rep;
  const int n = std::max(opt.samples, 10);

  {
    AssumptionCheck c{"A0", true, "A_r = 0 by construction"};
    const double a_phi0 = field.A_phi(0.0);
    const double a30 = field.A_3(0.0);
    if (field.kind() == PinchKind::general) {
      c.pass = false;
      c.detail = "general vector potential: axisymmetric form required";
    } else if (std::abs(a_phi0) > 1e-14 || std::abs(a30) > 1e-14) {
      c.pass = false;
      c.detail = fmt("A(0) = ", a_phi0 + a30);
    }
    rep.checks.push_back(c);
  }

  {
    AssumptionCheck c{"S1", true, ""};
    for (Species s : kBothSpecies) {
      const EnergyProfile& th = a[s].theta;
      if (a[s].psi.trivial()) continue;
      if (!std::isfinite(th.l1_norm())) {
        c.pass = false;
        c.detail += std::string(name_of(s)) + ": theta not integrable; ";
      }
      const double lo = th.tail ? th.E_lo - 6.0 * th.tail_width : th.E_max - 2.0;
      for (int i = 0; i <= n; ++i) {
        const double E = lo + (th.E_max + 1.0 - lo) * i / n;
        const double v = th(E);
        if ((E >= th.E_max && v != 0.0) || (E < th.E_max && !(v > 0.0))) {
          c.pass = false;
          c.detail += std::string(name_of(s)) + fmt(": sign violated at E = ", E) + "; ";
          break;
        }
      }
    }
    if (c.pass) c.detail = "theta > 0 below E_max, zero above (sampled)";
    rep.checks.push_back(c);
  }

  {
    AssumptionCheck c{"S2", true, ""};
    for (Species s : kBothSpecies) {
      if (field.kind() == PinchKind::z) break;
      const PsiProfile& p = a[s].psi;
      if (p.trivial()) continue;
      const double sg = charge_sign(s);
      bool bad = false;
      for (int i = -n / 2; i <= n / 2 && !bad; ++i) {
        const double sigma = 2.0 * i / n;
        for (int j = -10; j <= 10 && !bad; ++j) {
          const double mu = p.mu_extent() * j / 20.0;
          const double v = p(sigma, mu, s);
          const bool inside = sg * sigma < 0.0;
          const bool zero_required = !inside;
          const bool positive_required = inside && p.mu_factor(mu, s) > 0.0;
          if ((zero_required && v != 0.0) || (positive_required && !(v > 0.0)) ||
              v > p.majorant(mu) * (1.0 + 1e-12)) {
            c.pass = false;
            c.detail += std::string(name_of(s)) + fmt(": violated at sigma = ", sigma) + "; ";
            bad = true;
          }
        }
      }
    }
    if (c.pass)
      c.detail = field.kind() == PinchKind::z ? "sign condition not required for a z pinch"
                                              : "psi > 0 exactly on the signed half plane, psi <= psi* (sampled)";
    rep.checks.push_back(c);
  }

  {
    const std::string nm = field.kind() == PinchKind::z ? "S3z" : "S3";
    AssumptionCheck c{nm, true, ""};
    std::vector<double> r(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) r[static_cast<std::size_t>(i)] = opt.R_tilde + (opt.r_scan_max - opt.R_tilde) * i / n;
    if (!(opt.R_tilde < opt.R_c)) {
      c.pass = false;
      c.detail = "R_tilde must be smaller than R_c; ";
    }
    const std::vector<double> m = confinement_margin(a, field, r);
    double worst = m.empty() ? 0.0 : m[0];
    double at = r.empty() ? 0.0 : r[0];
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] < worst) {
        worst = m[i];
        at = r[i];
      }
    if (worst < 0.0) {
      c.pass = false;
      c.detail += fmt("margin ", worst) + fmt(" at r = ", at);
    } else {
      c.detail += fmt("min margin ", worst) + fmt(" on [R_tilde, ", opt.r_scan_max) + "]";
    }
    if (field.kind() == PinchKind::z) {
      for (Species s : kBothSpecies) {
        const PsiProfile& p = a[s].psi;
        if (p.trivial()) continue;
        if (!p.g0_cut || !(charge_sign(s) * p.G0 > 0.0)) {
          c.pass = false;
          c.detail += std::string("; ") + std::string(name_of(s)) + ": needs a G0 cutoff with s G0 > 0";
        }
      }
    }
    rep.checks.push_back(c);
  }

  {
    AssumptionCheck c{"S4", true, ""};
    for (Species s : kBothSpecies) {
      const EnergyProfile& th = a[s].theta;
      if (a[s].psi.trivial()) continue;
      std::optional<double> emin = s == Species::plus ? opt.E_min_plus : opt.E_min_minus;
      const double lo = emin.value_or(th.tail ? th.E_lo : -th.E_max);
      for (int i = 0; i < n; ++i) {
        const double E = lo + (th.E_max - lo) * i / n;
        if (!(th.derivative(E) < 0.0)) {
          c.pass = false;
          c.detail += std::string(name_of(s)) + fmt(": theta' >= 0 at E = ", E) + "; ";
          break;
        }
      }
    }
    if (c.pass) c.detail = "theta' < 0 on [E_min, E_max) (sampled)";
    rep.checks.push_back(c);
  }
  return rep;
}

}  // namespace vp25
