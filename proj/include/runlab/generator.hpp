#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "runlab/image.hpp"

namespace runlab {

/// Parameters of the random benchmark image family: the image is tiled by
/// g x g blocks (truncated at the right/bottom edges) and each block is
/// entirely foreground with probability `density`, independently per block.
struct GeneratorSpec {
    std::int32_t width = 0;
    std::int32_t height = 0;
    double density = 0.0;         ///< in [0, 1]
    std::int32_t granularity = 1; ///< block edge, at most min(width, height)
    std::uint64_t seed = 0;
};

namespace gen_detail {

// splitmix64: the draw for block (r, c) is the output of three recurrence
// steps fed by seed, r and c. Counter-based, so the image is identical no
// matter in which order blocks are produced, and bit-identical across
// platforms.
inline constexpr std::uint64_t gamma = 0x9E3779B97F4A7C15ull;

inline constexpr std::uint64_t sm_step(std::uint64_t x) {
    x += gamma;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline constexpr std::uint64_t block_draw(std::uint64_t seed,
                                          std::uint64_t block_row,
                                          std::uint64_t block_col) {
    return sm_step(sm_step(sm_step(seed) ^ block_row) ^ block_col);
}

}  // namespace gen_detail

/// Deterministic random binary image: same spec, same pixels, everywhere.
inline BinaryImage generate(const GeneratorSpec& spec) {
    if (spec.width < 1 || spec.height < 1)
        throw std::invalid_argument("generate: image must be at least 1x1");
    if (spec.density < 0.0 || spec.density > 1.0)
        throw std::invalid_argument("generate: density must be in [0, 1]");
    const std::int32_t g = spec.granularity;
    if (g < 1 || g > std::min(spec.width, spec.height))
        throw std::invalid_argument(
            "generate: granularity must be in [1, min(width, height)]");

    BinaryImage img(spec.width, spec.height);
    if (spec.density <= 0.0) return img;

    // Map the density to a 64-bit threshold; the product stays below 2^64
    // for d < 1, and d = 1 must accept every draw.
    const double scaled = spec.density * 18446744073709551616.0;
    const bool always = scaled >= 18446744073709551616.0;
    const std::uint64_t threshold =
        always ? 0 : static_cast<std::uint64_t>(scaled);

    for (std::int32_t br = 0; br * g < spec.height; ++br) {
        const std::int32_t r0 = br * g;
        const std::int32_t r1 = std::min(r0 + g, spec.height);
        for (std::int32_t bc = 0; bc * g < spec.width; ++bc) {
            const std::uint64_t draw = gen_detail::block_draw(
                spec.seed, static_cast<std::uint64_t>(br),
                static_cast<std::uint64_t>(bc));
            if (!always && draw >= threshold) continue;
            const std::int32_t c0 = bc * g;
            const std::int32_t c1 = std::min(c0 + g, spec.width);
            for (std::int32_t r = r0; r < r1; ++r)
                std::fill(img.pixels.begin() + static_cast<std::size_t>(r) * spec.width + c0,
                          img.pixels.begin() + static_cast<std::size_t>(r) * spec.width + c1,
                          std::uint8_t{1});
        }
    }
    return img;
}

}  // namespace runlab
