#pragma once

#include <array>
#include <string_view>

namespace vp25 {

/// Ions carry charge +1, electrons -1 (normalized units).
enum class Species { plus, minus };

inline constexpr std::array<Species, 2> kBothSpecies{Species::plus, Species::minus};

constexpr double charge_sign(Species s) { return s == Species::plus ? 1.0 : -1.0; }
constexpr std::size_t index_of(Species s) { return s == Species::plus ? 0 : 1; }
constexpr std::string_view name_of(Species s) { return s == Species::plus ? "plus" : "minus"; }

}  // namespace vp25
