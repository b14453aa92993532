#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "runlab/generator.hpp"
#include "runlab/labeling.hpp"

namespace runlab {

/// Sweep description for the density/granularity benchmark. Extras are
/// measured as separate pipeline runs against the same images; their cost
/// is reported as a delta over the base run (foreground + background
/// labeling with adjacency, nothing else), computed per seed so image
/// variance cancels.
struct BenchSpec {
    std::int32_t width = 2048;
    std::int32_t height = 2048;
    std::vector<double> densities;
    std::vector<std::int32_t> granularities;
    std::int32_t seeds = 5;
    std::uint64_t base_seed = 1;
    std::int32_t warmup = 1;
    std::int32_t iterations = 3;
    double clock_ghz = 0;    ///< optional; enables cycles-per-pixel columns
    bool report_cpp = false; ///< fail early instead of emitting empty cpp columns
    Connectivity connectivity = Connectivity::fg8_bg4;
    bool measure_euler = true;
    bool measure_fill = true;
    bool measure_features = true;
    bool measure_relabel = true;
};

/// One stats row: a (density, granularity, config, step) cell with min,
/// median and max nanoseconds per pixel. Step rows aggregate over all
/// seeds and iterations; "extra" rows aggregate per-seed deltas.
struct BenchRow {
    double density = 0;
    std::int32_t granularity = 1;
    std::string config;
    std::string step;
    double min_ns_px = 0;
    double med_ns_px = 0;
    double max_ns_px = 0;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    double clock_ghz = 0;
};

namespace bench_detail {

inline double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

inline BenchRow stats_row(double d, std::int32_t g, std::string config,
                          std::string step, const std::vector<double>& ns_px) {
    BenchRow row{d, g, std::move(config), std::move(step), 0, 0, 0};
    row.min_ns_px = *std::min_element(ns_px.begin(), ns_px.end());
    row.med_ns_px = median(ns_px);
    row.max_ns_px = *std::max_element(ns_px.begin(), ns_px.end());
    return row;
}

struct Variant {
    const char* name;
    LabelingConfig config;
};

}  // namespace bench_detail

/// Runs the sweep. Timed runs go through the same pipeline as label_image
/// and produce identical results; only wall clocks are added.
inline BenchReport run(const BenchSpec& spec) {
    if (spec.width < 1 || spec.height < 1)
        throw std::invalid_argument("bench: image must be at least 1x1");
    if (spec.iterations < 1 || spec.seeds < 1 || spec.warmup < 0)
        throw std::invalid_argument("bench: need at least one seed and iteration");
    if (spec.densities.empty() || spec.granularities.empty())
        throw std::invalid_argument("bench: empty density or granularity sweep");
    if (spec.report_cpp && spec.clock_ghz <= 0)
        throw std::invalid_argument(
            "bench: clock_ghz required for cycles-per-pixel reporting");

    const double px =
        static_cast<double>(spec.width) * static_cast<double>(spec.height);

    std::vector<bench_detail::Variant> variants;
    {
        LabelingConfig base;
        base.connectivity = spec.connectivity;
        variants.push_back({"base", base});
        if (spec.measure_euler) {
            LabelingConfig c = base;
            c.compute_euler = true;
            variants.push_back({"euler", c});
        }
        if (spec.measure_fill) {
            LabelingConfig c = base;
            c.fill_holes = true;
            variants.push_back({"fill", c});
        }
        if (spec.measure_features) {
            LabelingConfig c = base;
            c.compute_features = true;
            variants.push_back({"features", c});
        }
        if (spec.measure_relabel) {
            LabelingConfig c = base;
            c.relabel = true;
            variants.push_back({"relabel", c});
        }
    }

    BenchReport report;
    report.clock_ghz = spec.clock_ghz;
    for (const double d : spec.densities) {
        for (const std::int32_t g : spec.granularities) {
            // per variant: total samples (seed x iteration) and per-seed deltas
            std::vector<std::vector<double>> totals(variants.size());
            std::vector<std::vector<double>> deltas(variants.size());
            std::vector<double> enc, uni, clo, rel;

            for (std::int32_t s = 0; s < spec.seeds; ++s) {
                const BinaryImage img = generate(
                    {spec.width, spec.height, d, g, spec.base_seed + static_cast<std::uint64_t>(s)});
                StepTimes t;
                for (std::int32_t k = 0; k < spec.warmup; ++k)
                    for (const bench_detail::Variant& v : variants)
                        (void)timed_label_image(img, v.config, t);
                // Round-robin over variants so every iteration of an extra
                // has a base run measured moments earlier; paired deltas
                // cancel both image variance and clock drift.
                std::vector<std::vector<double>> sample(variants.size());
                for (std::int32_t k = 0; k < spec.iterations; ++k) {
                    for (std::size_t v = 0; v < variants.size(); ++v) {
                        (void)timed_label_image(img, variants[v].config, t);
                        sample[v].push_back(t.total_ns / px);
                        totals[v].push_back(t.total_ns / px);
                        if (v == 0) {
                            enc.push_back(t.encode_ns / px);
                            uni.push_back(t.unify_ns / px);
                            clo.push_back(t.closure_ns / px);
                        }
                        if (variants[v].config.relabel)
                            rel.push_back(t.relabel_ns / px);
                    }
                }
                for (std::size_t v = 1; v < variants.size(); ++v) {
                    std::vector<double> paired(sample[v].size());
                    for (std::size_t k = 0; k < paired.size(); ++k)
                        paired[k] = sample[v][k] - sample[0][k];
                    deltas[v].push_back(bench_detail::median(paired));
                }
            }

            report.rows.push_back(bench_detail::stats_row(d, g, "base", "encode", enc));
            report.rows.push_back(bench_detail::stats_row(d, g, "base", "unify", uni));
            report.rows.push_back(bench_detail::stats_row(d, g, "base", "closure", clo));
            report.rows.push_back(bench_detail::stats_row(d, g, "base", "total", totals[0]));
            for (std::size_t v = 1; v < variants.size(); ++v) {
                if (variants[v].config.relabel)
                    report.rows.push_back(bench_detail::stats_row(
                        d, g, variants[v].name, "relabel", rel));
                report.rows.push_back(bench_detail::stats_row(
                    d, g, variants[v].name, "total", totals[v]));
                report.rows.push_back(bench_detail::stats_row(
                    d, g, variants[v].name, "extra", deltas[v]));
            }
        }
    }
    return report;
}

/// CSV with a fixed column order. Cycles-per-pixel columns are derived from
/// the clock frequency (ns/px x GHz) and left empty when it was not given.
inline std::string export_csv(const BenchReport& report) {
    std::string out =
        "d,g,config,step,min_ns_px,med_ns_px,max_ns_px,min_cpp,med_cpp,max_cpp\n";
    char buf[64];
    const auto num = [&buf](double v) {
        std::snprintf(buf, sizeof buf, "%.6g", v);
        return std::string(buf);
    };
    for (const BenchRow& row : report.rows) {
        out += num(row.density) + ',' + std::to_string(row.granularity) + ',' +
               row.config + ',' + row.step + ',' + num(row.min_ns_px) + ',' +
               num(row.med_ns_px) + ',' + num(row.max_ns_px);
        if (report.clock_ghz > 0) {
            out += ',' + num(row.min_ns_px * report.clock_ghz) + ',' +
                   num(row.med_ns_px * report.clock_ghz) + ',' +
                   num(row.max_ns_px * report.clock_ghz);
        } else {
            out += ",,,";
        }
        out += '\n';
    }
    return out;
}

}  // namespace runlab
