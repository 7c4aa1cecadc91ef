#include "vp25/kernels/radial_density.hpp"

#include "vp25/core/error.hpp"

namespace vp25::kernels {

namespace serial {
void tabulate(const RadialPairFn& fn, std::vector<double>& plus, std::vector<double>& minus) {
  if (plus.size() != minus.size()) throw PreconditionError("tabulate: size mismatch");
  for (std::size_t i = 0; i < plus.size(); ++i) {
    const auto v = fn(i);
    plus[i] = v[0];
    minus[i] = v[1];
  }
}
}  // namespace serial

namespace omp {
void tabulate(const RadialPairFn& fn, std::vector<double>& plus, std::vector<double>& minus) {
  if (plus.size() != minus.size()) throw PreconditionError("tabulate: size mismatch");
  const auto n = static_cast<std::ptrdiff_t>(plus.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto v = fn(static_cast<std::size_t>(i));
    plus[static_cast<std::size_t>(i)] = v[0];
    minus[static_cast<std::size_t>(i)] = v[1];
  }
}
}  // namespace omp

}  // namespace vp25::kernels
