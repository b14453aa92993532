#include <catch2/catch_amalgamated.hpp>

#include "runlab/features.hpp"
#include "runlab/generator.hpp"
#include "runlab/labeling.hpp"
#include "runlab/tables.hpp"

#include "helpers.hpp"

using namespace runlab;

namespace {

FeatureAccumulator acc(std::int64_t s, std::int64_t sx, std::int64_t sy,
                       std::int32_t rmin, std::int32_t rmax, std::int32_t cmin,
                       std::int32_t cmax) {
    FeatureAccumulator f;
    f.s = s;
    f.sx = sx;
    f.sy = sy;
    f.row_min = rmin;
    f.row_max = rmax;
    f.col_min = cmin;
    f.col_max = cmax;
    return f;
}

}  // namespace

TEST_CASE("merge_features adds moments and takes the bbox envelope") {
    const auto a = acc(3, 6, 6, 2, 2, 1, 3);
    const auto b = acc(2, 9, 6, 3, 3, 4, 5);
    REQUIRE(merge_features(a, b) == acc(5, 15, 12, 2, 3, 1, 5));
    REQUIRE(merge_features(b, a) == merge_features(a, b));
}

TEST_CASE("merging an accumulator with itself doubles moments, keeps bbox") {
    const auto a = acc(3, 6, 6, 2, 2, 1, 3);
    REQUIRE(merge_features(a, a) == acc(6, 12, 12, 2, 2, 1, 3));
}

TEST_CASE("merge_features is commutative and associative") {
    const std::uint64_t seeds[] = {11, 42, 1234};
    for (const std::uint64_t s : seeds) {
        const auto a = acc(1 + s % 7, static_cast<std::int64_t>(s % 100),
                           static_cast<std::int64_t>(s % 31), 0,
                           static_cast<std::int32_t>(s % 5), 1,
                           static_cast<std::int32_t>(1 + s % 9));
        const auto b = acc(2, 17, 3, 1, 6, 0, 2);
        const auto c = acc(5, 4, 40, 3, 3, 7, 7);
        REQUIRE(merge_features(a, b) == merge_features(b, a));
        REQUIRE(merge_features(merge_features(a, b), c) ==
                merge_features(a, merge_features(b, c)));
    }
}

TEST_CASE("merge_features reports 64-bit overflow") {
    auto a = acc(1, std::numeric_limits<std::int64_t>::max(), 0, 0, 0, 0, 0);
    REQUIRE_THROWS_AS(merge_features(a, acc(1, 1, 0, 0, 0, 0, 0)),
                      std::overflow_error);
}

TEST_CASE("segment_features closed forms") {
    REQUIRE(segment_features(2, 1, 4) == acc(3, 6, 6, 2, 2, 1, 3));
    REQUIRE(segment_features(0, 0, 1) == acc(1, 0, 0, 0, 0, 0, 0));
    REQUIRE(segment_features(5, 4, 11) == acc(7, 49, 35, 5, 5, 4, 10));
}

TEST_CASE("equivalence table find walks ancestor chains without mutating") {
    EquivalenceTable eq;  // t = [0]
    eq.make_label(true);  // 1
    eq.make_label(false); // 2
    eq.make_label(true);  // 3
    eq.set_parent(2, 0);
    eq.set_parent(3, 2);  // t = [0,1,0,2]
    REQUIRE(eq.find(3) == 0);
    REQUIRE(eq.parent(3) == 2);  // untouched: no path compression
    REQUIRE(eq.find(0) == 0);
}

TEST_CASE("union_min keeps the smaller root") {
    EquivalenceTable eq;
    for (int i = 0; i < 4; ++i) eq.make_label(true);  // 1..4
    REQUIRE(eq.union_min(4, 1) == 1);
    REQUIRE(eq.parent(4) == 1);
    REQUIRE(eq.find(4) == 1);
    REQUIRE(eq.union_min(2, 3) == 2);
    REQUIRE(eq.parent(3) == 2);
    REQUIRE(eq.union_min(2, 2) == 2);
}

TEST_CASE("labels record their parity at creation") {
    EquivalenceTable eq;
    REQUIRE_FALSE(eq.is_foreground(0));
    const label_t fg = eq.make_label(true);
    const label_t bg = eq.make_label(false);
    REQUIRE(eq.is_foreground(fg));
    REQUIRE_FALSE(eq.is_foreground(bg));
}

TEST_CASE("adjacency table starts with the exterior sentinel") {
    AdjacencyTable adj;
    REQUIRE(adj[0] == no_label);
    adj.push(0);
    REQUIRE(adj[1] == 0);
    adj.redirect(1, 0);
    REQUIRE(adj[1] == 0);
}

TEST_CASE("pixel mass is conserved across all roots") {
    LabelingConfig cfg;
    cfg.compute_features = true;
    for (const std::uint64_t seed : {1ull, 2ull, 3ull, 4ull, 5ull}) {
        const BinaryImage img = generate({23, 17, 0.4, 2, seed});
        const LabelingResult res = label_image(img, cfg);
        std::int64_t sum = 0;
        for (const label_t r : res.roots()) sum += (*res.features)[r].s;
        REQUIRE(sum == img.pixel_count());
    }
}

TEST_CASE("equivalence invariants hold after any labeling") {
    for (const std::uint64_t seed : {7ull, 8ull, 9ull}) {
        const BinaryImage img = generate({19, 13, 0.5, 1, seed});
        const LabelingResult res = label_image(img, {});
        const EquivalenceTable& eq = res.equivalences;
        REQUIRE(eq.parent(0) == 0);
        for (label_t e = 0; e < eq.size(); ++e) {
            REQUIRE(eq.parent(e) <= e);                    // min-union discipline
            REQUIRE(eq.parent(eq.parent(e)) == eq.parent(e));  // flattened
        }
    }
}
