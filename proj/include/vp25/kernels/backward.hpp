#pragma once

#include <vector>

#include "vp25/pusher/field_history.hpp"

namespace vp25::kernels {

// values[i] = f_init(Z(0, t, points[i])). Points are independent.
namespace serial {
void backward_values(const std::vector<PhasePoint>& points, const PhaseSampler& f_init,
                     const FieldHistory& history, double t, std::vector<double>& values);
}
namespace omp {
void backward_values(const std::vector<PhasePoint>& points, const PhaseSampler& f_init,
                     const FieldHistory& history, double t, std::vector<double>& values);
}

}  // namespace vp25::kernels
