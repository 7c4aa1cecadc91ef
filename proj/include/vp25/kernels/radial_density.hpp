#pragma once

#include <array>
#include <functional>
#include <vector>

namespace vp25::kernels {

using RadialPairFn = std::function<std::array<double, 2>(std::size_t)>;

// Fills plus[i], minus[i] = fn(i) for i < plus.size(). fn must be pure.
namespace serial {
void tabulate(const RadialPairFn& fn, std::vector<double>& plus, std::vector<double>& minus);
}
namespace omp {
void tabulate(const RadialPairFn& fn, std::vector<double>& plus, std::vector<double>& minus);
}

}  // namespace vp25::kernels
