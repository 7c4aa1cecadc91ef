#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vp25/fieldsolve/external_field.hpp"
#include "vp25/steadystate/ansatz.hpp"

namespace vp25 {

struct AssumptionCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // violating sample or summary
};

struct CertificateReport {
  std::vector<AssumptionCheck> checks;
  bool all_pass() const;
  const AssumptionCheck* find(const std::string& name) const;
  std::string to_text() const;
};

struct AssumptionOptions {
  double R_tilde = 0.6;
  double R_c = 0.7;
  double r_scan_max = 3.0;  // confinement inequality checked on [R_tilde, r_scan_max]
  int samples = 400;
  /// Lower end of the S4 monotonicity check per species; defaults to E_lo
  /// (or -E_max without a tail) when no steady state is available.
  std::optional<double> E_min_plus, E_min_minus;
};

/// A_component(r) - required(r) on the given radii; for a theta pinch the
/// requirement is max_s sqrt(2 E_max + 4 pi^2 ||eta_*||_1 r^2), for a z pinch
/// max_s (|G0| + sqrt(...)) against A_3.
std::vector<double> confinement_margin(const AnsatzPair& ansatz, const ExternalField& field,
                                       const std::vector<double>& r);

/// Sampled checks of A0, S1, S2, S3 (or the z-pinch analogue) and S4. Finite
/// sampling is noted in each detail string.
CertificateReport check_assumptions(const AnsatzPair& ansatz, const ExternalField& field,
                                    const AssumptionOptions& options = {});

}  // namespace vp25
