#pragma once

#include <cstdint>
#include <limits>

namespace runlab {

/// Absolute (provisional or final) component label. Label 0 is reserved for
/// the exterior background component.
using label_t = std::uint32_t;

/// Sentinel for "no label"; the adjacency parent of the exterior.
inline constexpr label_t no_label = std::numeric_limits<label_t>::max();

/// Pixel adjacency convention. Foreground and background always use
/// complementary connectivities, otherwise the surrounding relation between
/// them is ill-defined.
enum class Connectivity : std::uint8_t {
    fg8_bg4,  ///< 8-connected foreground, 4-connected background (default)
    fg4_bg8,  ///< 4-connected foreground, 8-connected background
};

}  // namespace runlab
