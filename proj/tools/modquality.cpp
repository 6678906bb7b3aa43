#include <fstream>
#include <iostream>
#include <span>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "modquality/evolution.hpp"
#include "modquality/facts.hpp"
#include "modquality/metrics.hpp"
#include "modquality/modgraph.hpp"
#include "modquality/report.hpp"
#include "modquality/synth.hpp"

namespace {

using namespace modquality;

struct GlobalOpts {
    std::vector<std::string> schemes;
    std::string format = "text";
    bool lenient = false;
    std::string out_path;
};

void add_global_opts(CLI::App* cmd, GlobalOpts& opts) {
    cmd->add_option("--scheme", opts.schemes, "Module scheme(s) to analyze (default: all)");
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "structured"}));
    cmd->add_flag("--lenient", opts.lenient, "Ignore unknown fields in fact files");
    cmd->add_option("--out", opts.out_path, "Output file (default: standard output)");
}

std::vector<SystemSnapshot> load_all(const std::vector<std::string>& paths, bool lenient) {
    std::vector<SystemSnapshot> snapshots;
    snapshots.reserve(paths.size());
    for (const auto& path : paths) snapshots.push_back(load_snapshot_file(path, lenient));
    return snapshots;
}

std::vector<std::string> resolve_schemes(const GlobalOpts& opts,
                                         const std::vector<SystemSnapshot>& snapshots) {
    if (!opts.schemes.empty()) {
        for (const auto& name : opts.schemes) {
            for (const auto& snap : snapshots) {
                if (!snap.has_scheme(name)) {
                    throw NotFoundError("scheme '" + name + "' in snapshot '" +
                                        snap.metadata.version_label + "'");
                }
            }
        }
        return opts.schemes;
    }
    std::vector<std::string> names;
    for (const auto& scheme : snapshots.front().schemes) names.push_back(scheme.name);
    return names;
}

void write_output(const GlobalOpts& opts, const std::string& text) {
    if (opts.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) throw Error("cannot write to '" + opts.out_path + "'");
    out << text;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write to '" + path + "'");
    out << text;
}

std::vector<MetricKind> resolve_metrics(const std::vector<std::string>& names) {
    std::vector<MetricKind> metrics;
    if (names.empty()) {
        metrics = {MetricKind::Cohesion, MetricKind::Coupling, MetricKind::Ca, MetricKind::Ce};
    } else {
        for (const auto& n : names) metrics.push_back(parse_metric(n));
    }
    return metrics;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"modquality: modularization quality metrics over dependency fact files"};
    app.require_subcommand(1);

    GlobalOpts opts;

    auto* stats_cmd = app.add_subcommand("stats", "Descriptive statistics per version");
    std::vector<std::string> stats_files;
    stats_cmd->add_option("facts", stats_files, "Fact file(s)")->required();
    add_global_opts(stats_cmd, opts);

    auto* metrics_cmd = app.add_subcommand("metrics", "Per-module cohesion/coupling/Ca/Ce");
    std::vector<std::string> metrics_files;
    metrics_cmd->add_option("facts", metrics_files, "Fact file(s)")->required();
    add_global_opts(metrics_cmd, opts);

    auto* scc_cmd = app.add_subcommand("scc", "Cyclic-dependency statistics per version");
    std::vector<std::string> scc_files;
    std::string export_prefix;
    scc_cmd->add_option("facts", scc_files, "Fact file(s)")->required();
    scc_cmd->add_option("--export-graph", export_prefix,
                        "Write module dependency graphs to <prefix><version>.<scheme>.graph");
    add_global_opts(scc_cmd, opts);

    auto* compare_cmd = app.add_subcommand("compare", "Classify per-module metric deltas");
    std::vector<std::string> compare_files;
    std::vector<std::string> compare_metrics;
    compare_cmd->add_option("facts", compare_files, "Exactly two fact files")
        ->expected(2)
        ->required();
    compare_cmd->add_option("--metric", compare_metrics, "Metric(s) to classify (default: all)")
        ->check(CLI::IsMember({"cohesion", "coupling", "ca", "ce"}));
    add_global_opts(compare_cmd, opts);

    auto* report_cmd = app.add_subcommand("report", "All sections over a version series");
    std::vector<std::string> report_files;
    std::vector<std::string> report_sections;
    report_cmd->add_option("facts", report_files, "Fact file(s), in version order")->required();
    report_cmd->add_option("--section", report_sections,
                           "Section(s) to include (default: all)")
        ->check(CLI::IsMember({"stats", "metrics", "summary", "deltas", "scc"}));
    add_global_opts(report_cmd, opts);

    auto* generate_cmd = app.add_subcommand("generate", "Emit synthetic fact files");
    GeneratorConfig gen_config;
    std::string scenario;
    generate_cmd->add_option("--seed", gen_config.seed, "RNG seed");
    generate_cmd->add_option("--classes", gen_config.num_classes, "Number of classes");
    generate_cmd->add_option("--modules", gen_config.num_modules,
                             "Number of package-scheme modules");
    generate_cmd->add_option("--edge-prob", gen_config.edge_probability,
                             "Inter-module edge probability");
    generate_cmd->add_option("--intra-bias", gen_config.intra_bias,
                             "Intra-module probability multiplier");
    generate_cmd->add_option("--label", gen_config.version_label, "Version label");
    generate_cmd->add_option("--scenario", scenario, "Preset producing a version pair")
        ->check(CLI::IsMember({"monolith-split", "organic-growth"}));
    add_global_opts(generate_cmd, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        const OutputFormat format = parse_format(opts.format);

        if (app.got_subcommand(stats_cmd)) {
            const auto snapshots = load_all(stats_files, opts.lenient);
            const Table table = stats_table(snapshots);
            write_output(opts, render_tables(std::span(&table, 1), format));
        } else if (app.got_subcommand(metrics_cmd)) {
            const auto snapshots = load_all(metrics_files, opts.lenient);
            const auto schemes = resolve_schemes(opts, snapshots);
            std::vector<Table> tables;
            for (const auto& snap : snapshots) {
                for (const auto& scheme : schemes) tables.push_back(metrics_table(snap, scheme));
            }
            write_output(opts, render_tables(tables, format));
        } else if (app.got_subcommand(scc_cmd)) {
            const auto snapshots = load_all(scc_files, opts.lenient);
            const auto schemes = resolve_schemes(opts, snapshots);
            std::vector<Table> tables;
            for (const auto& scheme : schemes) tables.push_back(scc_table(snapshots, scheme));
            if (!export_prefix.empty()) {
                for (const auto& snap : snapshots) {
                    const auto g = class_dependency_graph(snap);
                    for (const auto& scheme : schemes) {
                        const auto mg = lift_module_graph(g, snap.scheme(scheme));
                        write_file(export_prefix + snap.metadata.version_label + "." + scheme +
                                       ".graph",
                                   export_edge_list(mg));
                    }
                }
            }
            write_output(opts, render_tables(tables, format));
        } else if (app.got_subcommand(compare_cmd)) {
            const auto snapshots = load_all(compare_files, opts.lenient);
            const auto schemes = resolve_schemes(opts, snapshots);
            const auto metrics = resolve_metrics(compare_metrics);
            const VersionPair pair{snapshots[0], snapshots[1]};
            std::vector<Table> tables;
            for (const auto& scheme : schemes) {
                tables.push_back(deltas_table(pair, scheme, metrics));
            }
            write_output(opts, render_tables(tables, format));
        } else if (app.got_subcommand(report_cmd)) {
            const auto snapshots = load_all(report_files, opts.lenient);
            const auto schemes = resolve_schemes(opts, snapshots);
            auto wants = [&](const std::string& s) {
                return report_sections.empty() ||
                       std::find(report_sections.begin(), report_sections.end(), s) !=
                           report_sections.end();
            };
            const auto metrics = resolve_metrics({});
            std::vector<Table> tables;
            if (wants("stats")) tables.push_back(stats_table(snapshots));
            if (wants("metrics")) {
                for (const auto& snap : snapshots) {
                    for (const auto& scheme : schemes) {
                        tables.push_back(metrics_table(snap, scheme));
                    }
                }
            }
            if (wants("summary")) {
                for (const auto& scheme : schemes) {
                    tables.push_back(summary_table(snapshots, scheme));
                }
            }
            if (wants("deltas") && snapshots.size() >= 2) {
                for (std::size_t i = 0; i + 1 < snapshots.size(); ++i) {
                    const VersionPair pair{snapshots[i], snapshots[i + 1]};
                    for (const auto& scheme : schemes) {
                        tables.push_back(deltas_table(pair, scheme, metrics));
                    }
                }
            }
            if (wants("scc")) {
                for (const auto& scheme : schemes) {
                    tables.push_back(scc_table(snapshots, scheme));
                }
            }
            write_output(opts, render_tables(tables, format));
        } else if (app.got_subcommand(generate_cmd)) {
            if (!scenario.empty()) {
                if (opts.out_path.empty()) {
                    std::cerr << "generate --scenario requires --out <prefix>\n";
                    return 2;
                }
                for (const auto& snap : run_scenario(scenario, gen_config.seed)) {
                    write_file(opts.out_path + snap.metadata.version_label + ".facts",
                               serialize_snapshot(snap));
                }
            } else {
                write_output(opts, serialize_snapshot(generate(gen_config)));
            }
        }
    } catch (const Error& e) {
        std::cerr << "modquality: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "modquality: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
