#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace runlab {

/// First raw moments (S, Sx, Sy) and inclusive bounding box of a pixel set.
/// A default-constructed accumulator represents the empty set; its bounding
/// box fields are sentinels arranged so that merging is a no-op.
struct FeatureAccumulator {
    std::int64_t s = 0;   ///< pixel count
    std::int64_t sx = 0;  ///< sum of column indices
    std::int64_t sy = 0;  ///< sum of row indices
    std::int32_t row_min = std::numeric_limits<std::int32_t>::max();
    std::int32_t row_max = std::numeric_limits<std::int32_t>::min();
    std::int32_t col_min = std::numeric_limits<std::int32_t>::max();
    std::int32_t col_max = std::numeric_limits<std::int32_t>::min();

    bool empty() const { return s == 0; }
    bool operator==(const FeatureAccumulator&) const = default;
};

/// One accumulator per label, indexed by label.
using FeatureTable = std::vector<FeatureAccumulator>;

/// Accumulates b into a. Counts and sums add, bounding boxes take the
/// min/max envelope. Throws std::overflow_error if a 64-bit sum overflows,
/// which means the image exceeds the supported size range.
inline void merge_into(FeatureAccumulator& a, const FeatureAccumulator& b) {
    bool ovf = __builtin_add_overflow(a.s, b.s, &a.s);
    ovf |= __builtin_add_overflow(a.sx, b.sx, &a.sx);
    ovf |= __builtin_add_overflow(a.sy, b.sy, &a.sy);
    if (ovf)
        throw std::overflow_error(
            "feature accumulator overflow: image exceeds supported sizes");
    a.row_min = std::min(a.row_min, b.row_min);
    a.row_max = std::max(a.row_max, b.row_max);
    a.col_min = std::min(a.col_min, b.col_min);
    a.col_max = std::max(a.col_max, b.col_max);
}

/// Merge of two accumulators. Commutative and associative.
inline FeatureAccumulator merge_features(FeatureAccumulator a,
                                         const FeatureAccumulator& b) {
    merge_into(a, b);
    return a;
}

/// Moments of the horizontal run [j0, j1) of a given row, in closed form
/// (no per-pixel loop).
inline FeatureAccumulator segment_features(std::int32_t row, std::int32_t j0,
                                           std::int32_t j1) {
    FeatureAccumulator f;
    const std::int64_t n = j1 - j0;
    f.s = n;
    f.sx = n * (j0 + j1 - 1) / 2;
    f.sy = static_cast<std::int64_t>(row) * n;
    f.row_min = f.row_max = row;
    f.col_min = j0;
    f.col_max = j1 - 1;
    return f;
}

}  // namespace runlab
