#pragma once

// Brute-force reference implementations used to cross-check the scan
// pipeline: flood-fill labeling, surrounding-tree construction from raster
// geometry, bit-quad Euler counting, and pixel-level hole filling. These
// favor obviousness over speed and share no code with the engine.

#include <array>
#include <cassert>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "runlab/image.hpp"
#include "runlab/types.hpp"

namespace runlab {

/// Reference partition of an image into components. Ids are dense, assigned
/// in raster order of each component's first pixel; id 0 is the exterior,
/// which owns every background pixel connected to the border (the image is
/// treated as surrounded by a background frame).
struct OraclePartition {
    std::int32_t width = 0;
    std::int32_t height = 0;
    std::vector<std::int32_t> comp;         ///< per pixel
    std::vector<std::uint8_t> comp_fg;      ///< per component id
    std::vector<std::int64_t> first_pixel;  ///< raster index; -1 for the exterior
    std::int32_t count = 0;                 ///< number of components, exterior included
};

enum class Traversal { bfs, dfs };

namespace oracle_detail {

using Offset = std::pair<std::int32_t, std::int32_t>;

inline std::span<const Offset> offsets(bool eight) {
    static constexpr std::array<Offset, 8> k8{{{-1, -1},
                                               {-1, 0},
                                               {-1, 1},
                                               {0, -1},
                                               {0, 1},
                                               {1, -1},
                                               {1, 0},
                                               {1, 1}}};
    static constexpr std::array<Offset, 4> k4{
        {{-1, 0}, {0, -1}, {0, 1}, {1, 0}}};
    if (eight) return {k8.data(), k8.size()};
    return {k4.data(), k4.size()};
}

inline void flood(const BinaryImage& img, std::vector<std::int32_t>& comp,
                  std::int32_t id, std::vector<std::int64_t>& frontier,
                  std::span<const Offset> adj, Traversal tr) {
    const std::int32_t w = img.width, h = img.height;
    std::size_t head = 0;
    while (head < frontier.size()) {
        std::int64_t at;
        if (tr == Traversal::bfs) {
            at = frontier[head++];
        } else {
            at = frontier.back();
            frontier.pop_back();
        }
        const std::int32_t r = static_cast<std::int32_t>(at / w);
        const std::int32_t c = static_cast<std::int32_t>(at % w);
        for (const auto& [dr, dc] : adj) {
            const std::int32_t nr = r + dr, nc = c + dc;
            if (nr < 0 || nc < 0 || nr >= h || nc >= w) continue;
            const std::int64_t ni = static_cast<std::int64_t>(nr) * w + nc;
            if (comp[ni] != -1 || img.pixels[ni] != img.pixels[at]) continue;
            comp[ni] = id;
            frontier.push_back(ni);
        }
    }
}

}  // namespace oracle_detail

/// Flood-fill labeling with a virtual background frame: every background
/// pixel reachable from the border joins the exterior (id 0). The partition
/// does not depend on the traversal order; the knob exists so tests can
/// prove it.
inline OraclePartition flood_label(const BinaryImage& img, Connectivity conn,
                                   Traversal tr = Traversal::bfs) {
    const bool fg8 = conn == Connectivity::fg8_bg4;
    const std::int32_t w = img.width, h = img.height;
    OraclePartition p;
    p.width = w;
    p.height = h;
    p.comp.assign(static_cast<std::size_t>(w) * h, -1);
    p.comp_fg = {0};
    p.first_pixel = {-1};
    p.count = 1;

    // Exterior: seed from all border background pixels.
    std::vector<std::int64_t> frontier;
    for (std::int32_t r = 0; r < h; ++r)
        for (std::int32_t c = 0; c < w; ++c) {
            if (r != 0 && r != h - 1 && c != 0 && c != w - 1) continue;
            const std::int64_t i = static_cast<std::int64_t>(r) * w + c;
            if (img.pixels[i] == 0 && p.comp[i] == -1) {
                p.comp[i] = 0;
                frontier.push_back(i);
            }
        }
    oracle_detail::flood(img, p.comp, 0, frontier,
                         oracle_detail::offsets(!fg8), tr);

    for (std::int64_t i = 0; i < img.pixel_count(); ++i) {
        if (p.comp[i] != -1) continue;
        const bool fg = img.pixels[i] != 0;
        const std::int32_t id = p.count++;
        p.comp_fg.push_back(fg ? 1 : 0);
        p.first_pixel.push_back(i);
        p.comp[i] = id;
        frontier.assign({i});
        oracle_detail::flood(img, p.comp, id, frontier,
                             oracle_detail::offsets(fg ? fg8 : !fg8), tr);
    }
    return p;
}

/// Parent map over component ids; -1 for the exterior. Built from raster
/// geometry alone: the parent of a component is the component of the pixel
/// immediately left of its raster-first pixel, with the frame supplying the
/// exterior. This is a different mechanism than the engine's speculative
/// initial adjacency, so agreement between the two is meaningful.
inline std::vector<std::int32_t> oracle_adjacency_tree(
    const OraclePartition& p) {
    std::vector<std::int32_t> parent(static_cast<std::size_t>(p.count), -1);
    for (std::int32_t c = 1; c < p.count; ++c) {
        const std::int64_t fp = p.first_pixel[c];
        const std::int32_t col = static_cast<std::int32_t>(fp % p.width);
        parent[c] = col == 0 ? 0 : p.comp[fp - 1];
    }
    return parent;
}

/// Euler number from 2x2 window counts over the background-padded image:
/// (Q1 - Q3 - 2*QD)/4 for 8-connected foreground, (Q1 - Q3 + 2*QD)/4 for
/// 4-connected.
inline std::int64_t bitquad_euler(const BinaryImage& img, Connectivity conn) {
    const std::int32_t w = img.width, h = img.height;
    const auto at = [&](std::int32_t r, std::int32_t c) -> std::int32_t {
        if (r < 0 || c < 0 || r >= h || c >= w) return 0;
        return img(r, c);
    };
    std::int64_t q1 = 0, q3 = 0, qd = 0;
    for (std::int32_t r = -1; r < h; ++r)
        for (std::int32_t c = -1; c < w; ++c) {
            const std::int32_t tl = at(r, c), tr = at(r, c + 1);
            const std::int32_t bl = at(r + 1, c), br = at(r + 1, c + 1);
            const std::int32_t n = tl + tr + bl + br;
            q1 += n == 1;
            q3 += n == 3;
            qd += n == 2 && tl == br && tl != tr;
        }
    const std::int64_t num = conn == Connectivity::fg8_bg4
                                 ? q1 - q3 - 2 * qd
                                 : q1 - q3 + 2 * qd;
    assert(num % 4 == 0);
    return num / 4;
}

/// Pixel-level hole filling: background pixels not reachable from the
/// border become foreground. Idempotent.
inline BinaryImage oracle_fill_holes(const BinaryImage& img,
                                     Connectivity conn) {
    const OraclePartition p = flood_label(img, conn);
    BinaryImage out(img.width, img.height);
    for (std::int64_t i = 0; i < img.pixel_count(); ++i)
        out.pixels[i] = p.comp[i] == 0 ? 0 : 1;
    return out;
}

}  // namespace runlab
