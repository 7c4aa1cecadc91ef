#include "vp25/kernels/backward.hpp"

namespace vp25::kernels {

namespace serial {
void backward_values(const std::vector<PhasePoint>& points, const PhaseSampler& f_init,
                     const FieldHistory& history, double t, std::vector<double>& values) {
  values.resize(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    values[i] = backward_evaluate(f_init, history, t, points[i]);
}
}  // namespace serial

namespace omp {
void backward_values(const std::vector<PhasePoint>& points, const PhaseSampler& f_init,
                     const FieldHistory& history, double t, std::vector<double>& values) {
  values.resize(points.size());
  const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(dynamic, 256)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    values[static_cast<std::size_t>(i)] =
        backward_evaluate(f_init, history, t, points[static_cast<std::size_t>(i)]);
}
}  // namespace omp

}  // namespace vp25::kernels
