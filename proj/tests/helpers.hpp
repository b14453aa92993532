#pragma once

// Shared fixtures for the test suites.

#include <map>
#include <string>
#include <vector>

#include "runlab/image.hpp"
#include "runlab/types.hpp"

namespace testutil {

inline runlab::BinaryImage make_image(const std::vector<std::string>& rows) {
    runlab::BinaryImage img(static_cast<std::int32_t>(rows[0].size()),
                            static_cast<std::int32_t>(rows.size()));
    for (std::int32_t r = 0; r < img.height; ++r)
        for (std::int32_t c = 0; c < img.width; ++c)
            img(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] == '1' ? 1 : 0;
    return img;
}

/// The 15x7 grid: a foreground block with one real hole (the lower U) and
/// an inner background region that escapes through a notch on the right.
inline runlab::BinaryImage fig_example() {
    return make_image({
        "011111111111110",
        "010000010000010",
        "010111010111010",
        "010101000101010",
        "010101111101010",
        "010100000001000",
        "011111111111110",
    });
}

/// 7x7 nesting chain: ring around a hole around a dot.
inline runlab::BinaryImage ring_hole_dot() {
    return make_image({
        "0000000",
        "0111110",
        "0100010",
        "0101010",
        "0100010",
        "0111110",
        "0000000",
    });
}

/// Canonical form of a label raster: label 0 keeps id 0, all other labels
/// are renumbered in raster order of first appearance. Matches the oracle
/// partition's numbering.
inline std::vector<std::int32_t> canonical(const runlab::LabelImage& li) {
    std::vector<std::int32_t> out(li.labels.size(), 0);
    std::map<runlab::label_t, std::int32_t> ids;
    std::int32_t next = 1;
    for (std::size_t i = 0; i < li.labels.size(); ++i) {
        const runlab::label_t l = li.labels[i];
        if (l == 0) continue;
        auto [it, fresh] = ids.try_emplace(l, next);
        if (fresh) ++next;
        out[i] = it->second;
    }
    return out;
}

/// Raster-order map from surviving label to canonical id (0 stays 0).
inline std::map<runlab::label_t, std::int32_t> canonical_ids(
    const runlab::LabelImage& li) {
    std::map<runlab::label_t, std::int32_t> ids;
    ids[0] = 0;
    std::int32_t next = 1;
    for (const runlab::label_t l : li.labels)
        if (l != 0 && ids.try_emplace(l, next).second) ++next;
    return ids;
}

}  // namespace testutil
