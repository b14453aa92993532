#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "runlab/types.hpp"

namespace runlab {

/// Run-length encoding of one image row.
///
/// `er` maps each column to its segment index, `rlc` holds the ner+1 segment
/// boundaries (segment k spans [rlc[k], rlc[k+1])), and `era` maps segment
/// index to absolute label once unification has run. Segment k holds pixels
/// of value k mod 2: even segments are background, odd ones foreground.
/// Only segment 0 may be empty (when the row starts with foreground).
struct RowCode {
    std::vector<std::int32_t> er;
    std::vector<std::int32_t> rlc;
    std::vector<label_t> era;
    std::int32_t ner = 0;

    /// Becomes the all-background exterior row used as the scan predecessor
    /// of row 0, entirely owned by label 0.
    void reset_exterior(std::int32_t width) {
        er.assign(static_cast<std::size_t>(width), 0);
        rlc.assign({0, width});
        era.assign({0});
        ner = 1;
    }
};

/// Union-find over labels with the min-label union rule: the root of every
/// class is its smallest member, so merge order never changes the winner.
/// Carries one foreground/background bit per label, fixed at creation.
class EquivalenceTable {
public:
    EquivalenceTable() : t_{0}, parity_{0} {}

    label_t size() const { return static_cast<label_t>(t_.size()); }

    label_t make_label(bool foreground) {
        const label_t e = size();
        t_.push_back(e);
        parity_.push_back(foreground ? 1 : 0);
        return e;
    }

    bool is_foreground(label_t e) const { return parity_[e] != 0; }
    label_t parent(label_t e) const { return t_[e]; }
    bool is_root(label_t e) const { return t_[e] == e; }

    void set_parent(label_t e, label_t p) {
        assert(p <= e);
        t_[e] = p;
    }

    /// Terminal ancestor of e. Read-only: flattening happens in the
    /// transitive closure, not here.
    label_t find(label_t e) const {
        while (t_[e] != e) e = t_[e];
        return e;
    }

    /// Union of two roots; the smaller label absorbs the larger and is
    /// returned.
    label_t union_min(label_t ra, label_t rb) {
        assert(is_root(ra) && is_root(rb));
        if (ra < rb) {
            t_[rb] = ra;
            return ra;
        }
        if (rb < ra) t_[ra] = rb;
        return rb;
    }

    /// Attaches e's current root to the exterior component.
    void attach_to_exterior(label_t e) { t_[find(e)] = 0; }

private:
    std::vector<label_t> t_;
    std::vector<std::uint8_t> parity_;
};

/// Surrounding relation over labels: entry e holds a label of the component
/// that is adjacent to and (speculatively) surrounds e's component. Entries
/// are recorded at label creation; entries of labels that lose a union go
/// stale and are never read, because lookups only ever happen at roots and
/// min-union keeps the root whose entry is valid. After transitive closure
/// every surviving root's entry is the final root of its surrounding
/// component. Entry 0 is the no_label sentinel (the exterior surrounds
/// everything and is surrounded by nothing).
class AdjacencyTable {
public:
    AdjacencyTable() : i_{no_label} {}

    label_t size() const { return static_cast<label_t>(i_.size()); }

    void push(label_t initial) { i_.push_back(initial); }

    label_t operator[](label_t e) const { return i_[e]; }

    void redirect(label_t e, label_t root) { i_[e] = root; }

private:
    std::vector<label_t> i_;
};

}  // namespace runlab
