// Command-line front end: labeling, tree export, Euler number, hole
// filling, random image generation and the benchmark sweep.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "runlab/runlab.hpp"

namespace {

using namespace runlab;

const std::map<std::string, Connectivity> connectivity_names{
    {"fg8bg4", Connectivity::fg8_bg4},
    {"fg4bg8", Connectivity::fg4_bg8},
};

const std::map<std::string, PbmFormat> pbm_names{
    {"p1", PbmFormat::p1},
    {"p4", PbmFormat::p4},
};

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// "0:1:0.05" (inclusive range) or "0.2,0.5,0.8"
std::vector<double> parse_densities(const std::string& text) {
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        double start = 0, stop = 0, step = 0;
        if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &start, &stop, &step) != 3 ||
            step <= 0)
            throw CLI::ValidationError("--densities", "expected start:stop:step");
        for (double d = start; d <= stop + 1e-9; d += step)
            out.push_back(std::min(d, 1.0));
    } else {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t comma = std::min(text.find(',', pos), text.size());
            out.push_back(std::stod(text.substr(pos, comma - pos)));
            pos = comma + 1;
        }
    }
    for (const double d : out)
        if (d < 0 || d > 1)
            throw CLI::ValidationError("--densities", "values must be in [0, 1]");
    return out;
}

struct LabelCmd {
    std::string input, output, features_csv;
    bool features = false, relabel = false, densify = false, fill = false;
    Connectivity conn = Connectivity::fg8_bg4;

    int run() const {
        LabelingConfig cfg;
        cfg.connectivity = conn;
        cfg.fill_holes = fill;
        cfg.compute_euler = true;
        cfg.compute_features = features || !features_csv.empty();
        cfg.relabel = relabel || !output.empty();
        cfg.densify_labels = densify;

        const LabelingResult res = label_image(read_pbm_file(input), cfg);
        if (!output.empty()) {
            const LabelFormat fmt =
                ends_with(output, ".csv") ? LabelFormat::csv : LabelFormat::pgm16;
            write_file(output, write_label_image(*res.labels, fmt));
        }
        if (!features_csv.empty())
            write_file(features_csv,
                       write_features_csv(components(res), cfg.densify_labels));
        std::printf("foreground components: %lld\n", (long long)*res.fg_count);
        std::printf("holes: %lld\n", (long long)*res.hole_count);
        std::printf("euler: %lld\n", (long long)*res.euler);
        return 0;
    }
};

struct TreeCmd {
    std::string input, output;
    TreeFormat format = TreeFormat::dot;
    bool fill = false;
    Connectivity conn = Connectivity::fg8_bg4;

    int run() const {
        LabelingConfig cfg;
        cfg.connectivity = conn;
        cfg.fill_holes = fill;
        cfg.compute_features = true;
        const ComponentTree tree =
            adjacency_tree(label_image(read_pbm_file(input), cfg));
        const std::string text = write_tree(tree, format);
        if (output.empty())
            std::fwrite(text.data(), 1, text.size(), stdout);
        else
            write_file(output, text);
        return 0;
    }
};

struct EulerCmd {
    std::string input;
    Connectivity conn = Connectivity::fg8_bg4;

    int run() const {
        LabelingConfig cfg;
        cfg.connectivity = conn;
        cfg.compute_euler = true;
        std::printf("%lld\n",
                    (long long)euler_number(label_image(read_pbm_file(input), cfg)));
        return 0;
    }
};

struct FillCmd {
    std::string input, output;
    PbmFormat format = PbmFormat::p4;
    Connectivity conn = Connectivity::fg8_bg4;

    int run() const {
        LabelingConfig cfg;
        cfg.connectivity = conn;
        cfg.fill_holes = true;
        cfg.relabel = true;
        const LabelingResult res = label_image(read_pbm_file(input), cfg);
        const BinaryImage filled = binarize_labels(*res.labels, res.equivalences);
        write_file(output, write_pbm(filled, format));
        return 0;
    }
};

struct GenCmd {
    std::int32_t size = 0, width = 0, height = 0, granularity = 1;
    double density = 0.5;
    std::uint64_t seed = 0;
    std::string output;
    PbmFormat format = PbmFormat::p4;

    int run() const {
        GeneratorSpec spec;
        spec.width = width > 0 ? width : size;
        spec.height = height > 0 ? height : size;
        spec.density = density;
        spec.granularity = granularity;
        spec.seed = seed;
        write_file(output, write_pbm(generate(spec), format));
        return 0;
    }
};

struct BenchCmd {
    BenchSpec spec;
    std::string densities = "0:1:0.05";
    std::string output;

    int run() {
        spec.densities = parse_densities(densities);
        if (spec.granularities.empty()) spec.granularities = {1, 2, 4, 8, 16};
        spec.report_cpp = spec.clock_ghz > 0;
        const std::string csv = export_csv(runlab::run(spec));
        if (output.empty())
            std::fwrite(csv.data(), 1, csv.size(), stdout);
        else
            write_file(output, csv);
        return 0;
    }
};

void add_connectivity_flag(CLI::App* cmd, Connectivity& conn) {
    cmd->add_option("--connectivity", conn, "adjacency convention")
        ->transform(CLI::CheckedTransformer(connectivity_names))
        ->option_text("{fg8bg4,fg4bg8} [fg8bg4]");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"run-based foreground/background component labeling and analysis"};
    app.require_subcommand(1);
    app.footer("The RUNLAB_THREADS environment variable is reserved and currently ignored.");

    LabelCmd label;
    CLI::App* label_cmd = app.add_subcommand(
        "label", "label components, write label image and feature table");
    label_cmd->add_option("input", label.input, "input PBM")->required();
    label_cmd->add_option("-o,--output", label.output,
                          "label image (.csv for CSV, 16-bit PGM otherwise); implies --relabel");
    label_cmd->add_option("--features-csv", label.features_csv,
                          "write per-component features; implies --features");
    label_cmd->add_flag("--features", label.features, "compute S/Sx/Sy/bbox");
    label_cmd->add_flag("--relabel", label.relabel, "produce per-pixel labels");
    label_cmd->add_flag("--densify", label.densify, "renumber labels consecutively");
    label_cmd->add_flag("--fill-holes", label.fill, "merge holes into their component");
    add_connectivity_flag(label_cmd, label.conn);

    TreeCmd tree;
    CLI::App* tree_cmd = app.add_subcommand("tree", "export the adjacency tree");
    tree_cmd->add_option("input", tree.input, "input PBM")->required();
    tree_cmd->add_option("--format", tree.format, "dot or json")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, TreeFormat>{{"dot", TreeFormat::dot},
                                              {"json", TreeFormat::json}}))
        ->option_text("{dot,json} [dot]");
    tree_cmd->add_option("-o,--output", tree.output, "output path (default stdout)");
    tree_cmd->add_flag("--fill-holes", tree.fill, "fill holes first");
    add_connectivity_flag(tree_cmd, tree.conn);

    EulerCmd euler;
    CLI::App* euler_cmd = app.add_subcommand("euler", "print the Euler number");
    euler_cmd->add_option("input", euler.input, "input PBM")->required();
    add_connectivity_flag(euler_cmd, euler.conn);

    FillCmd fill;
    CLI::App* fill_cmd = app.add_subcommand("fill", "write the hole-filled image");
    fill_cmd->add_option("input", fill.input, "input PBM")->required();
    fill_cmd->add_option("-o,--output", fill.output, "output PBM")->required();
    fill_cmd->add_option("--format", fill.format, "p1 or p4")
        ->transform(CLI::CheckedTransformer(pbm_names))
        ->option_text("{p1,p4} [p4]");
    add_connectivity_flag(fill_cmd, fill.conn);

    GenCmd gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a random test image");
    gen_cmd->add_option("--size", gen.size, "square image edge");
    gen_cmd->add_option("--width", gen.width, "image width");
    gen_cmd->add_option("--height", gen.height, "image height");
    gen_cmd->add_option("--density", gen.density, "block foreground probability")
        ->required();
    gen_cmd->add_option("--granularity", gen.granularity, "block edge")
        ->default_val(1);
    gen_cmd->add_option("--seed", gen.seed, "generator seed")->default_val(0);
    gen_cmd->add_option("-o,--output", gen.output, "output PBM")->required();
    gen_cmd->add_option("--format", gen.format, "p1 or p4")
        ->transform(CLI::CheckedTransformer(pbm_names))
        ->option_text("{p1,p4} [p4]");

    BenchCmd bench;
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "density/granularity benchmark sweep");
    bench_cmd->add_option("--size", bench.spec.width, "square image edge")
        ->default_val(2048);
    bench_cmd->add_option("--densities", bench.densities,
                          "start:stop:step or comma list");
    bench_cmd->add_option("--granularities", bench.spec.granularities,
                          "comma-separated block edges")
        ->delimiter(',');
    bench_cmd->add_option("--seeds", bench.spec.seeds, "images per cell")
        ->default_val(5);
    bench_cmd->add_option("--seed", bench.spec.base_seed, "first seed")
        ->default_val(1);
    bench_cmd->add_option("--warmup", bench.spec.warmup, "warmup runs per variant")
        ->default_val(1);
    bench_cmd->add_option("--iters", bench.spec.iterations,
                          "measured runs per variant")
        ->default_val(3);
    bench_cmd->add_option("--clock-ghz", bench.spec.clock_ghz,
                          "clock frequency for cycles-per-pixel columns");
    bench_cmd->add_option("-o,--output", bench.output, "report CSV (default stdout)");
    bench_cmd->add_flag("--no-euler", [&bench](std::int64_t) { bench.spec.measure_euler = false; },
                        "skip the Euler variant");
    bench_cmd->add_flag("--no-fill", [&bench](std::int64_t) { bench.spec.measure_fill = false; },
                        "skip the hole-filling variant");
    bench_cmd->add_flag("--no-features", [&bench](std::int64_t) { bench.spec.measure_features = false; },
                        "skip the features variant");
    bench_cmd->add_flag("--no-relabel", [&bench](std::int64_t) { bench.spec.measure_relabel = false; },
                        "skip the relabel variant");
    add_connectivity_flag(bench_cmd, bench.spec.connectivity);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (label_cmd->parsed()) {
            if (label.densify && !(label.relabel || !label.output.empty())) {
                std::cerr << "label: --densify requires --relabel\n";
                return 1;
            }
            return label.run();
        }
        if (tree_cmd->parsed()) return tree.run();
        if (euler_cmd->parsed()) return euler.run();
        if (fill_cmd->parsed()) return fill.run();
        if (gen_cmd->parsed()) {
            if (gen.size <= 0 && (gen.width <= 0 || gen.height <= 0)) {
                std::cerr << "gen: pass --size or both --width and --height\n";
                return 1;
            }
            return gen.run();
        }
        if (bench_cmd->parsed()) {
            bench.spec.height = bench.spec.width;
            return bench.run();
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
