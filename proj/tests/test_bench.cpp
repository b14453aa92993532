#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "runlab/bench.hpp"

using namespace runlab;

namespace {

std::vector<label_t> parents(const EquivalenceTable& eq) {
    std::vector<label_t> t;
    for (label_t e = 0; e < eq.size(); ++e) t.push_back(eq.parent(e));
    return t;
}

BenchSpec tiny_spec() {
    BenchSpec spec;
    spec.width = 64;
    spec.height = 64;
    spec.densities = {0.5};
    spec.granularities = {1};
    spec.seeds = 2;
    spec.warmup = 0;
    spec.iterations = 1;
    return spec;
}

}  // namespace

TEST_CASE("timed runs are semantically inert") {
    for (const std::uint64_t seed : {1ull, 2ull}) {
        const BinaryImage img = generate({48, 40, 0.5, 1, seed});
        LabelingConfig cfg;
        cfg.compute_features = true;
        cfg.compute_euler = true;
        cfg.relabel = true;
        cfg.fill_holes = seed % 2 == 0;

        StepTimes t;
        const LabelingResult timed = timed_label_image(img, cfg, t);
        const LabelingResult plain = label_image(img, cfg);

        REQUIRE(parents(timed.equivalences) == parents(plain.equivalences));
        REQUIRE(*timed.features == *plain.features);
        REQUIRE(*timed.labels == *plain.labels);
        REQUIRE(*timed.euler == *plain.euler);
        REQUIRE(t.total_ns > 0);
        REQUIRE(t.encode_ns > 0);
        REQUIRE(t.unify_ns > 0);
    }
}

TEST_CASE("report rows cover every configured step and extra") {
    const BenchReport report = run(tiny_spec());
    std::vector<std::pair<std::string, std::string>> expect = {
        {"base", "encode"},   {"base", "unify"},    {"base", "closure"},
        {"base", "total"},    {"euler", "total"},   {"euler", "extra"},
        {"fill", "total"},    {"fill", "extra"},    {"features", "total"},
        {"features", "extra"},{"relabel", "relabel"},{"relabel", "total"},
        {"relabel", "extra"},
    };
    REQUIRE(report.rows.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) {
        REQUIRE(report.rows[i].config == expect[i].first);
        REQUIRE(report.rows[i].step == expect[i].second);
        REQUIRE(report.rows[i].min_ns_px <= report.rows[i].med_ns_px);
        REQUIRE(report.rows[i].med_ns_px <= report.rows[i].max_ns_px);
    }
}

TEST_CASE("csv export has the stable schema and parses back") {
    BenchReport report = run(tiny_spec());
    report.clock_ghz = 2.0;
    const std::string csv = export_csv(report);
    std::istringstream in(csv);
    std::string line;
    REQUIRE(std::getline(in, line));
    REQUIRE(line ==
            "d,g,config,step,min_ns_px,med_ns_px,max_ns_px,min_cpp,med_cpp,max_cpp");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        std::size_t cells = 1;
        for (const char ch : line) cells += ch == ',';
        REQUIRE(cells == 10);
        // cpp columns are ns/px scaled by the clock
        std::istringstream cell(line);
        std::string v;
        std::vector<std::string> parts;
        while (std::getline(cell, v, ',')) parts.push_back(v);
        REQUIRE(std::stod(parts[7]) ==
                Catch::Approx(std::stod(parts[4]) * 2.0).epsilon(1e-3));
    }
    REQUIRE(rows == report.rows.size());
}

TEST_CASE("an empty report exports as a bare header") {
    REQUIRE(export_csv(BenchReport{}) ==
            "d,g,config,step,min_ns_px,med_ns_px,max_ns_px,min_cpp,med_cpp,max_cpp\n");
}

TEST_CASE("cpp columns are empty without a clock frequency") {
    const BenchReport report = run(tiny_spec());
    const std::string csv = export_csv(report);
    const std::size_t first_row = csv.find('\n') + 1;
    const std::string row = csv.substr(first_row, csv.find('\n', first_row) - first_row);
    REQUIRE(row.substr(row.size() - 3) == ",,,");
}

TEST_CASE("an empty sweep is rejected, as is cpp without a clock") {
    BenchSpec spec = tiny_spec();
    spec.densities.clear();
    REQUIRE_THROWS_AS(run(spec), std::invalid_argument);

    BenchSpec cpp = tiny_spec();
    cpp.report_cpp = true;
    REQUIRE_THROWS_AS(run(cpp), std::invalid_argument);
    cpp.clock_ghz = 2.6;
    REQUIRE_NOTHROW(run(cpp));
}
