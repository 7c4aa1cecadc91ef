#pragma once

#include <map>
#include <string>

#include "vp25/steadystate/steady_state.hpp"

namespace vp25 {

// CSV layout: a block of "# key=value" metadata lines (ansatz description,
// R_plus, R_minus, R, E_min_plus, E_min_minus, M, iterations, converged, ...)
// followed by the header r,U0,rho0_plus,rho0_minus and one row per radius.
void write_steady_csv(const std::string& path, const RadialSteadyState& state,
                      const std::map<std::string, std::string>& metadata = {});

struct SteadyCsv {
  RadialSteadyState state;
  std::map<std::string, std::string> metadata;
};
SteadyCsv read_steady_csv(const std::string& path);

}  // namespace vp25
