#pragma once

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "runlab/features.hpp"
#include "runlab/image.hpp"
#include "runlab/tables.hpp"
#include "runlab/types.hpp"

namespace runlab {

struct LabelingConfig {
    Connectivity connectivity = Connectivity::fg8_bg4;
    bool fill_holes = false;        ///< merge holes into their surrounding component
    bool compute_features = false;  ///< accumulate S/Sx/Sy/bbox per component
    bool relabel = false;           ///< produce a per-pixel label image
    bool densify_labels = false;    ///< renumber roots 0,1,2,...; requires relabel
    bool compute_euler = false;     ///< expose component/hole counts and Euler number
};

struct LabelingResult {
    std::int32_t width = 0;
    std::int32_t height = 0;
    LabelingConfig config;
    EquivalenceTable equivalences;
    AdjacencyTable adjacency;
    std::optional<FeatureTable> features;
    std::optional<LabelImage> labels;
    // Component counts are taken before hole filling, so
    // euler = fg_count - hole_count holds in every configuration.
    std::optional<std::int64_t> fg_count;
    std::optional<std::int64_t> hole_count;
    std::optional<std::int64_t> euler;

    /// Surviving root labels in ascending order. The exterior (0) is first.
    std::vector<label_t> roots() const {
        std::vector<label_t> out;
        for (label_t e = 0; e < equivalences.size(); ++e)
            if (equivalences.is_root(e)) out.push_back(e);
        return out;
    }
};

/// Scan state shared by the per-row passes. `prev` describes the row above
/// the one being unified; before row 0 it is the virtual exterior row, which
/// makes the image behave as if surrounded by a background frame.
struct PipelineState {
    std::int32_t width = 0;
    std::int32_t height = 0;
    RowCode prev;
    RowCode cur;
    EquivalenceTable eq;
    AdjacencyTable adj;
    FeatureTable feat;
    std::vector<RowCode> retained;  ///< per-row rlc/era copies, kept only for relabeling
    std::int64_t fg_roots = 0;      ///< foreground roots, counted pre-fill by the closure
    std::int64_t bg_roots = 0;      ///< holes: non-exterior background roots, pre-fill

    PipelineState(std::int32_t w, std::int32_t h, const LabelingConfig& cfg)
        : width(w), height(h) {
        assert(w >= 1 && h >= 1);
        prev.reset_exterior(w);
        cur.er.reserve(static_cast<std::size_t>(w));
        cur.rlc.reserve(static_cast<std::size_t>(w) + 2);
        cur.era.reserve(static_cast<std::size_t>(w) + 1);
        if (cfg.compute_features) feat.push_back({});  // exterior accumulator
        if (cfg.relabel) retained.reserve(static_cast<std::size_t>(h));
    }
};

/// Run-length encodes one row: fills er/rlc/ner; era is left for
/// unification. Total function, no failure modes.
inline void encode_row(std::span<const std::uint8_t> pixels, RowCode& rc) {
    const std::int32_t w = static_cast<std::int32_t>(pixels.size());
    assert(w >= 1);
    rc.er.resize(static_cast<std::size_t>(w));
    rc.rlc.resize(static_cast<std::size_t>(w) + 2);
    rc.rlc[0] = 0;
    std::int32_t er = 0;
    std::uint8_t left = 0;
    for (std::int32_t j = 0; j < w; ++j) {
        const std::uint8_t x = pixels[j];
        assert(x <= 1);
        rc.rlc[er + 1] = j;  // kept only if this column starts a new segment
        er += x ^ left;
        rc.er[j] = er;
        left = x;
    }
    rc.rlc[er + 1] = w;
    rc.ner = er + 1;
    rc.rlc.resize(static_cast<std::size_t>(rc.ner) + 1);
}

namespace detail {

template <bool kFeatures>
void unify_row_impl(PipelineState& st, std::int32_t row, std::int32_t flip) {
    const RowCode& above = st.prev;
    RowCode& rc = st.cur;
    EquivalenceTable& eq = st.eq;
    const std::int32_t w = st.width;

    rc.era.resize(static_cast<std::size_t>(rc.ner));
    std::int32_t er_first = 0;
    if (rc.rlc[1] == 0) {  // empty leading background segment: row starts FG
        rc.era[0] = 0;
        er_first = 1;
    }
    for (std::int32_t er = er_first; er < rc.ner; ++er) {
        const std::int32_t j0 = rc.rlc[er];
        const std::int32_t j1 = rc.rlc[er + 1];
        const std::int32_t p = er & 1;  // 1 = foreground segment
        const std::int32_t c8 = p ^ flip;

        FeatureAccumulator f;
        if constexpr (kFeatures) f = segment_features(row, j0, j1);

        // Probe the row above across the span, extended by one column on
        // each side when this segment's parity is the 8-connected one.
        const std::int32_t a0 = std::max(j0 - c8, 0);
        const std::int32_t a1 = std::min(j1 + c8, w);
        std::int32_t er0 = above.er[a0];
        std::int32_t er1 = above.er[a1 - 1];
        // Snap both ends inward to segments of matching parity.
        er0 += (er0 & 1) ^ p;
        er1 -= (er1 & 1) ^ p;

        if (er1 >= er0) {
            assert(er1 < above.ner);
            label_t a = eq.find(above.era[er0]);
            for (std::int32_t k = er0 + 2; k <= er1; k += 2)
                a = eq.union_min(a, eq.find(above.era[k]));
            rc.era[er] = a;
            if constexpr (kFeatures) merge_into(st.feat[a], f);
        } else {
            // No same-parity segment above: this is a component's topmost
            // segment. The label left of it belongs to the component that
            // (speculatively) surrounds the new one; left of column 0 sits
            // the exterior frame.
            const label_t e = eq.make_label(p != 0);
            rc.era[er] = e;
            st.adj.push(er > 0 ? rc.era[er - 1] : label_t{0});
            if constexpr (kFeatures) st.feat.push_back(f);
        }
    }
    // Border columns belong to the exterior.
    eq.attach_to_exterior(rc.era[0]);
    if (rc.ner & 1) eq.attach_to_exterior(rc.era[rc.ner - 1]);
}

}  // namespace detail

/// Assigns an absolute label to every segment of the current row, recording
/// equivalences, features and initial adjacencies as it goes. Requires the
/// previous row to be fully unified (era filled).
inline void unify_row(PipelineState& st, std::int32_t row,
                      const LabelingConfig& cfg) {
    const std::int32_t flip =
        cfg.connectivity == Connectivity::fg4_bg8 ? 1 : 0;
    if (cfg.compute_features)
        detail::unify_row_impl<true>(st, row, flip);
    else
        detail::unify_row_impl<false>(st, row, flip);
}

/// Attaches every background segment of the last unified row to the
/// exterior, as if an all-background row followed the image.
inline void close_bottom_border(PipelineState& st) {
    for (std::int32_t er = 0; er < st.cur.ner; er += 2)
        st.eq.attach_to_exterior(st.cur.era[er]);
}

/// Flattens the equivalence table so every label points at its final root,
/// merges features up to the roots, and redirects each surviving root's
/// adjacency entry to the final root of its surrounding component. Also
/// counts foreground roots and holes (pre-fill).
///
/// With fill_holes, any root whose surrounding component resolves to a
/// non-exterior label is merged into it. Nested structures collapse in one
/// pass because surrounding components always carry smaller labels and are
/// resolved first.
inline void transitive_closure(PipelineState& st, bool fill_holes,
                               bool with_features) {
    EquivalenceTable& eq = st.eq;
    const label_t ne = eq.size();
    std::int64_t fg = 0, bg = 0;
    for (label_t e = 1; e < ne; ++e) {
        label_t a = eq.parent(e);
        if (a == e) {
            ++(eq.is_foreground(e) ? fg : bg);
            if (fill_holes) {
                const label_t i = st.adj[e];  // i < e, already resolved
                if (eq.parent(i) > 0) {
                    eq.set_parent(e, i);
                    a = i;
                }
            }
        }
        if (a < e) {
            const label_t r = eq.parent(a);
            eq.set_parent(e, r);
            if (with_features) merge_into(st.feat[r], st.feat[e]);
        } else {
            st.adj.redirect(e, eq.parent(st.adj[e]));
        }
    }
    st.fg_roots = fg;
    st.bg_roots = bg;
}

/// Expands retained row codes into a per-pixel label image. Only rlc/era/ner
/// of each retained code are consulted. With densify, roots are renumbered
/// consecutively in ascending order, keeping the exterior at 0.
/// Throws std::logic_error when called without retained row codes (the
/// labeling ran with relabel off).
inline LabelImage relabel(std::span<const RowCode> rows,
                          const EquivalenceTable& eq, bool densify,
                          std::int32_t width) {
    if (rows.empty())
        throw std::logic_error("relabel: row codes were not retained");
    LabelImage out(width, static_cast<std::int32_t>(rows.size()));
    std::vector<label_t> remap;
    if (densify) {
        remap.resize(eq.size());
        label_t next = 0;
        for (label_t e = 0; e < eq.size(); ++e)
            if (eq.is_root(e)) remap[e] = next++;
    }
    label_t* dst = out.labels.data();
    for (const RowCode& rc : rows) {
        std::int32_t j0 = rc.rlc[0];
        for (std::int32_t er = 0; er < rc.ner; ++er) {
            const std::int32_t j1 = rc.rlc[er + 1];
            label_t r = eq.parent(rc.era[er]);
            if (densify) r = remap[r];
            std::fill(dst + j0, dst + j1, r);
            j0 = j1;
        }
        dst += width;
    }
    return out;
}

/// Wall-clock nanoseconds spent in each pipeline phase of one labeling run.
struct StepTimes {
    double encode_ns = 0;
    double unify_ns = 0;
    double closure_ns = 0;
    double relabel_ns = 0;
    double total_ns = 0;
};

namespace detail {

template <bool kTimed>
LabelingResult run_pipeline(const BinaryImage& image,
                            const LabelingConfig& config, StepTimes* times) {
    using clock = std::chrono::steady_clock;
    const auto ns = [](clock::duration d) {
        return std::chrono::duration<double, std::nano>(d).count();
    };

    if (config.densify_labels && !config.relabel)
        throw std::invalid_argument(
            "label_image: densify_labels requires relabel");

    [[maybe_unused]] clock::time_point run_start;
    if constexpr (kTimed) run_start = clock::now();

    PipelineState st(image.width, image.height, config);
    [[maybe_unused]] clock::time_point mark;
    if constexpr (kTimed) mark = clock::now();
    for (std::int32_t i = 0; i < image.height; ++i) {
        if (i > 0) std::swap(st.prev, st.cur);
        if constexpr (kTimed) {
            encode_row(image.row(i), st.cur);
            const auto t1 = clock::now();
            unify_row(st, i, config);
            const auto t2 = clock::now();
            times->encode_ns += ns(t1 - mark);
            times->unify_ns += ns(t2 - t1);
            mark = t2;
        } else {
            encode_row(image.row(i), st.cur);
            unify_row(st, i, config);
        }
        if (config.relabel)
            st.retained.push_back(RowCode{{}, st.cur.rlc, st.cur.era, st.cur.ner});
    }

    [[maybe_unused]] clock::time_point t3;
    if constexpr (kTimed) t3 = clock::now();
    close_bottom_border(st);
    transitive_closure(st, config.fill_holes, config.compute_features);
    [[maybe_unused]] clock::time_point t4;
    if constexpr (kTimed) t4 = clock::now();

    LabelingResult res;
    res.width = image.width;
    res.height = image.height;
    res.config = config;
    if (config.relabel)
        res.labels =
            relabel(st.retained, st.eq, config.densify_labels, image.width);
    if constexpr (kTimed) {
        const auto t5 = clock::now();
        times->closure_ns = ns(t4 - t3);
        times->relabel_ns = ns(t5 - t4);
    }
    if (config.compute_euler) {
        res.fg_count = st.fg_roots;
        res.hole_count = st.bg_roots;
        res.euler = st.fg_roots - st.bg_roots;
    }
    if (config.compute_features) res.features = std::move(st.feat);
    res.equivalences = std::move(st.eq);
    res.adjacency = std::move(st.adj);
    if constexpr (kTimed) times->total_ns = ns(clock::now() - run_start);
    return res;
}

}  // namespace detail

/// Labels foreground and background components of a binary image in one
/// scan: per-row segment encoding, unification against the previous row,
/// border closing, transitive closure, and optionally relabeling. Euler
/// number, features and hole filling are produced on request.
inline LabelingResult label_image(const BinaryImage& image,
                                  const LabelingConfig& config = {}) {
    return detail::run_pipeline<false>(image, config, nullptr);
}

/// Same pipeline as label_image with per-phase wall times written to
/// `times`. Results are identical to the untimed run.
inline LabelingResult timed_label_image(const BinaryImage& image,
                                        const LabelingConfig& config,
                                        StepTimes& times) {
    times = {};
    return detail::run_pipeline<true>(image, config, &times);
}

/// Recovers the binary image encoded by a label raster: a pixel is
/// foreground iff its label's parity is foreground. Labels must be raw
/// roots (not densified). With hole filling this returns the image with
/// holes painted over.
inline BinaryImage binarize_labels(const LabelImage& li,
                                   const EquivalenceTable& eq) {
    BinaryImage out(li.width, li.height);
    for (std::size_t i = 0; i < li.labels.size(); ++i)
        out.pixels[i] = eq.is_foreground(li.labels[i]) ? 1 : 0;
    return out;
}

}  // namespace runlab
