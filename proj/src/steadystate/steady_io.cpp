#include "vp25/steadystate/steady_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "vp25/core/error.hpp"

namespace vp25 {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_steady_csv(const std::string& path, const RadialSteadyState& st,
                      const std::map<std::string, std::string>& metadata) {
  std::ofstream out(path);
  if (!out) throw Error("write_steady_csv: cannot open " + path);
  for (const auto& [k, v] : metadata) out << "# " << k << "=" << v << "\n";
  out << "# rmax=" << num(st.rmax) << "\n";
  out << "# R_plus=" << num(st.R_plus) << "\n# R_minus=" << num(st.R_minus) << "\n# R=" << num(st.R) << "\n";
  out << "# E_min_plus=" << num(st.E_min_plus) << "\n# E_min_minus=" << num(st.E_min_minus) << "\n";
  out << "# M=" << num(st.M) << "\n# iterations=" << st.iterations << "\n";
  out << "# increment=" << num(st.increment) << "\n# residual=" << num(st.residual) << "\n";
  out << "# converged=" << (st.converged ? 1 : 0) << "\n# scan_resolution=" << num(st.scan_resolution) << "\n";
  out << "r,U0,rho0_plus,rho0_minus\n";
  for (std::size_t i = 0; i < st.r.size(); ++i)
    out << num(st.r[i]) << "," << num(st.U0[i]) << "," << num(st.rho_plus[i]) << ","
        << num(st.rho_minus[i]) << "\n";
  if (!out) throw Error("write_steady_csv: write failed for " + path);
}

SteadyCsv read_steady_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("read_steady_csv: cannot open " + path);
  SteadyCsv out;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      out.metadata[line.substr(2, eq - 2)] = line.substr(eq + 1);
      continue;
    }
    if (!header) {
      if (line != "r,U0,rho0_plus,rho0_minus") throw Error("read_steady_csv: unexpected header");
      header = true;
      continue;
    }
    std::istringstream ss(line);
    double v[4];
    char comma;
    ss >> v[0] >> comma >> v[1] >> comma >> v[2] >> comma >> v[3];
    if (!ss) throw Error("read_steady_csv: malformed row: " + line);
    out.state.r.push_back(v[0]);
    out.state.U0.push_back(v[1]);
    out.state.rho_plus.push_back(v[2]);
    out.state.rho_minus.push_back(v[3]);
  }
  auto& m = out.metadata;
  auto get = [&](const char* k) {
    auto it = m.find(k);
    if (it == m.end()) throw Error(std::string("read_steady_csv: missing metadata ") + k);
    return std::stod(it->second);
  };
  RadialSteadyState& st = out.state;
  st.rmax = get("rmax");
  st.R_plus = get("R_plus");
  st.R_minus = get("R_minus");
  st.R = get("R");
  st.E_min_plus = get("E_min_plus");
  st.E_min_minus = get("E_min_minus");
  st.M = get("M");
  st.iterations = static_cast<int>(get("iterations"));
  st.increment = get("increment");
  st.residual = get("residual");
  st.converged = get("converged") != 0.0;
  st.scan_resolution = get("scan_resolution");
  return out;
}

}  // namespace vp25
