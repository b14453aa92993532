#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "runlab/labeling.hpp"

namespace runlab {

/// One surviving component of a labeling.
struct ComponentRecord {
    label_t root = 0;
    bool foreground = false;
    label_t parent_root = no_label;  ///< no_label for the exterior
    std::int32_t depth = 0;          ///< nesting depth; exterior = 0
    FeatureAccumulator features;     ///< empty unless features were computed
};

/// One record per surviving root, exterior included, ascending by root
/// label. Requires a closed result (any label_image output qualifies).
inline std::vector<ComponentRecord> components(const LabelingResult& res) {
    const EquivalenceTable& eq = res.equivalences;
    std::vector<ComponentRecord> out;
    std::vector<std::int32_t> depth(eq.size(), 0);
    for (label_t e = 0; e < eq.size(); ++e) {
        if (!eq.is_root(e)) continue;
        ComponentRecord rec;
        rec.root = e;
        rec.foreground = eq.is_foreground(e);
        if (e != 0) {
            rec.parent_root = res.adjacency[e];
            depth[e] = depth[rec.parent_root] + 1;
        }
        rec.depth = depth[e];
        if (res.features) rec.features = (*res.features)[e];
        out.push_back(rec);
    }
    return out;
}

/// All holes: background roots other than the exterior. Any such component
/// is surrounded by construction, since border background merges with the
/// exterior during the scan. Misuse to call on a hole-filled result.
inline std::vector<ComponentRecord> holes(const LabelingResult& res) {
    if (res.config.fill_holes)
        throw std::logic_error("holes: result was computed with hole filling");
    std::vector<ComponentRecord> out;
    for (ComponentRecord& rec : components(res))
        if (!rec.foreground && rec.root != 0) out.push_back(std::move(rec));
    return out;
}

/// Surrounding tree over surviving components, rooted at the exterior.
struct ComponentTree {
    std::vector<ComponentRecord> nodes;              ///< ascending by root; nodes[0] is the exterior
    std::vector<std::vector<std::size_t>> children;  ///< indices into nodes, ascending
};

inline ComponentTree adjacency_tree(const LabelingResult& res) {
    ComponentTree tree;
    tree.nodes = components(res);
    tree.children.resize(tree.nodes.size());
    std::vector<std::size_t> index(res.equivalences.size(), 0);
    for (std::size_t i = 0; i < tree.nodes.size(); ++i)
        index[tree.nodes[i].root] = i;
    for (std::size_t i = 1; i < tree.nodes.size(); ++i)
        tree.children[index[tree.nodes[i].parent_root]].push_back(i);
    return tree;
}

/// Euler number: foreground components minus holes, both counted before
/// any hole filling. Requires a labeling run with compute_euler.
inline std::int64_t euler_number(const LabelingResult& res) {
    if (!res.euler)
        throw std::logic_error("euler_number: labeling ran without compute_euler");
    return *res.euler;
}

/// Connected-operator filtering: every component selected by the predicate
/// is merged into its surrounding component, exactly like hole filling does
/// for holes. Children of a merged component share the fate of the region
/// they are embedded in and merge into the same survivor, so the result
/// matches relabeling the image with the selected components painted over.
///
/// The predicate must not select the exterior. The input is left untouched;
/// the returned result has no label image (pixel labels are not rewritten).
template <class Predicate>
LabelingResult filter_components(const LabelingResult& res, Predicate&& selected) {
    const std::vector<ComponentRecord> recs = components(res);
    if (selected(static_cast<const ComponentRecord&>(recs[0])))
        throw std::invalid_argument(
            "filter_components: predicate must not select the exterior");

    LabelingResult out = res;
    out.labels.reset();

    // target[e] = surviving root absorbing root e, or no_label if e survives
    std::vector<label_t> target(res.equivalences.size(), no_label);
    for (std::size_t i = 1; i < recs.size(); ++i) {
        const ComponentRecord& rec = recs[i];
        label_t tgt = no_label;
        if (target[rec.parent_root] != no_label)
            tgt = target[rec.parent_root];  // embedded in a merged region
        else if (selected(static_cast<const ComponentRecord&>(rec)))
            tgt = rec.parent_root;
        if (tgt != no_label) {
            target[rec.root] = tgt;
            if (out.features)
                merge_into((*out.features)[tgt], (*out.features)[rec.root]);
        }
    }

    for (label_t e = 0; e < out.equivalences.size(); ++e) {
        const label_t r = out.equivalences.parent(e);
        if (target[r] != no_label) out.equivalences.set_parent(e, target[r]);
    }
    for (label_t e = 1; e < out.equivalences.size(); ++e) {
        if (!out.equivalences.is_root(e)) continue;
        const label_t pr = out.adjacency[e];
        if (target[pr] != no_label) out.adjacency.redirect(e, target[pr]);
    }
    return out;
}

}  // namespace runlab
