#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

#include "runlab/types.hpp"

namespace runlab {

/// Dense binary raster, one byte per pixel, row-major.
/// Pixel values are 0 (background) and 1 (foreground).
struct BinaryImage {
    std::int32_t width = 0;
    std::int32_t height = 0;
    std::vector<std::uint8_t> pixels;

    BinaryImage() = default;
    BinaryImage(std::int32_t w, std::int32_t h)
        : width(w), height(h),
          pixels(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0) {
        assert(w >= 1 && h >= 1);
    }

    std::int64_t pixel_count() const {
        return static_cast<std::int64_t>(width) * height;
    }

    std::uint8_t operator()(std::int32_t row, std::int32_t col) const {
        return pixels[static_cast<std::size_t>(row) * width + col];
    }
    std::uint8_t& operator()(std::int32_t row, std::int32_t col) {
        return pixels[static_cast<std::size_t>(row) * width + col];
    }

    std::span<const std::uint8_t> row(std::int32_t r) const {
        return {pixels.data() + static_cast<std::size_t>(r) * width,
                static_cast<std::size_t>(width)};
    }

    bool operator==(const BinaryImage&) const = default;
};

/// Per-pixel label raster produced by relabeling. Stores final root labels,
/// or consecutive ids when the labeling was densified.
struct LabelImage {
    std::int32_t width = 0;
    std::int32_t height = 0;
    std::vector<label_t> labels;

    LabelImage() = default;
    LabelImage(std::int32_t w, std::int32_t h)
        : width(w), height(h),
          labels(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0) {
        assert(w >= 1 && h >= 1);
    }

    label_t operator()(std::int32_t row, std::int32_t col) const {
        return labels[static_cast<std::size_t>(row) * width + col];
    }
    label_t& operator()(std::int32_t row, std::int32_t col) {
        return labels[static_cast<std::size_t>(row) * width + col];
    }

    bool operator==(const LabelImage&) const = default;
};

}  // namespace runlab
