#include "modquality/report.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace modquality {

using nlohmann::json;

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "structured") return OutputFormat::Structured;
    throw InvalidArgumentError("unknown format '" + name +
                               "' (expected text, csv or structured)");
}

namespace {

std::string render_text(const Table& table) {
    std::vector<std::size_t> widths(table.headers.size(), 0);
    auto widen = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size() && i < widths.size(); ++i) {
            widths[i] = std::max(widths[i], cells[i].size());
        }
    };
    widen(table.headers);
    for (const auto& row : table.rows) widen(row);

    std::ostringstream out;
    if (!table.title.empty()) out << table.title << "\n";
    auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) out << "  ";
            if (i == 0) {
                out << cells[i];
                if (i + 1 < cells.size()) out << std::string(widths[i] - cells[i].size(), ' ');
            } else {
                out << std::string(widths[i] - cells[i].size(), ' ') << cells[i];
            }
        }
        out << "\n";
    };
    emit(table.headers);
    for (const auto& row : table.rows) emit(row);
    return out.str();
}

std::string render_csv(const Table& table) {
    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) out << ",";
            out << cells[i];
        }
        out << "\n";
    };
    emit(table.headers);
    for (const auto& row : table.rows) emit(row);
    return out.str();
}

json table_to_json(const Table& table) {
    return json{{"title", table.title}, {"headers", table.headers}, {"rows", table.rows}};
}

}  // namespace

std::string render_table(const Table& table, OutputFormat format) {
    switch (format) {
        case OutputFormat::Text: return render_text(table);
        case OutputFormat::Csv: return render_csv(table);
        case OutputFormat::Structured: return table_to_json(table).dump(2) + "\n";
    }
    throw InvalidArgumentError("invalid output format");
}

std::string render_tables(std::span<const Table> tables, OutputFormat format) {
    if (format == OutputFormat::Structured) {
        json arr = json::array();
        for (const auto& t : tables) arr.push_back(table_to_json(t));
        return arr.dump(2) + "\n";
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < tables.size(); ++i) {
        if (i > 0) out << "\n";
        if (format == OutputFormat::Csv && !tables[i].title.empty()) {
            out << "# " << tables[i].title << "\n";
        }
        out << render_table(tables[i], format);
    }
    return out.str();
}

Table parse_structured_table(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    Table table;
    table.title = doc.at("title").get<std::string>();
    table.headers = doc.at("headers").get<std::vector<std::string>>();
    table.rows = doc.at("rows").get<std::vector<std::vector<std::string>>>();
    return table;
}

namespace {

std::string opt_cell(const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : "unknown";
}

std::string name_list_cell(const std::vector<ModuleName>& names) {
    if (names.empty()) return "-";
    std::string out;
    for (const auto& n : names) {
        if (!out.empty()) out += " ";
        out += n;
    }
    return out;
}

}  // namespace

Table stats_table(std::span<const SystemSnapshot> snapshots) {
    Table table;
    table.title = "Descriptive statistics";
    table.headers = {"vers."};
    std::vector<std::string> scheme_names;
    if (!snapshots.empty()) {
        for (const auto& scheme : snapshots.front().schemes) {
            scheme_names.push_back(scheme.name);
        }
    }
    for (const auto& name : scheme_names) table.headers.push_back("# " + name + "s");
    table.headers.insert(table.headers.end(),
                         {"# classes", "# methods", "LOC", "# invocations"});

    for (const auto& snap : snapshots) {
        const DescriptiveStats stats = descriptive_stats(snap);
        std::vector<std::string> row{stats.version_label};
        for (const auto& name : scheme_names) {
            auto it = std::find_if(stats.num_modules_per_scheme.begin(),
                                   stats.num_modules_per_scheme.end(),
                                   [&](const auto& kv) { return kv.first == name; });
            row.push_back(it != stats.num_modules_per_scheme.end() ? std::to_string(it->second)
                                                                   : "unknown");
        }
        row.push_back(std::to_string(stats.num_classes));
        row.push_back(opt_cell(stats.num_methods));
        row.push_back(opt_cell(stats.lines_of_code));
        row.push_back(std::to_string(stats.num_invocations));
        table.rows.push_back(std::move(row));
    }
    return table;
}

Table metrics_table(const SystemSnapshot& s, const std::string& scheme_name) {
    Table table;
    table.title = "Module metrics (" + scheme_name + ", " + s.metadata.version_label + ")";
    table.headers = {"module", "N", "intra", "Cohesion", "Coupling", "Ca", "Ce"};
    for (const auto& row : module_metrics_table(s, scheme_name)) {
        table.rows.push_back({row.module, std::to_string(row.class_count),
                              std::to_string(row.intra_edges), format_fixed(row.cohesion, 3),
                              format_fixed(row.coupling, 3), std::to_string(row.ca),
                              std::to_string(row.ce)});
    }
    return table;
}

Table summary_table(std::span<const SystemSnapshot> snapshots, const std::string& scheme_name) {
    Table table;
    table.title = "Average cohesion and coupling (" + scheme_name + ")";
    table.headers = {"version", "Cohesion", "Coupling"};
    for (const auto& snap : snapshots) {
        const auto rows = module_metrics_table(snap, scheme_name);
        const SystemMetricsSummary summary = system_summary(rows);
        table.rows.push_back({snap.metadata.version_label, format_fixed(summary.avg_cohesion, 3),
                              format_fixed(summary.avg_coupling, 3)});
    }
    return table;
}

Table delta_table(const DeltaTable& delta) {
    Table table;
    table.title = "Metric evolution (" + delta.scheme + ")";
    table.headers = {"metric", "incr.", "same", "decr.", "created", "removed"};
    table.rows.push_back({metric_name(delta.metric), std::to_string(delta.increased),
                          std::to_string(delta.same), std::to_string(delta.decreased),
                          name_list_cell(delta.created), name_list_cell(delta.removed)});
    return table;
}

Table deltas_table(const VersionPair& pair, const std::string& scheme_name,
                   std::span<const MetricKind> metrics) {
    Table table;
    table.title = "Metric evolution " + pair.label() + " (" + scheme_name + ")";
    table.headers = {"metric", "incr.", "same", "decr.", "created", "removed"};
    for (MetricKind metric : metrics) {
        const DeltaTable delta = classify_delta(pair, scheme_name, metric);
        table.rows.push_back({metric_name(metric), std::to_string(delta.increased),
                              std::to_string(delta.same), std::to_string(delta.decreased),
                              name_list_cell(delta.created), name_list_cell(delta.removed)});
    }
    return table;
}

Table scc_table(std::span<const SystemSnapshot> snapshots, const std::string& scheme_name) {
    Table table;
    table.title = "Strongly connected components (" + scheme_name + ")";
    table.headers = {"version", "# SCC", "Largest SCC"};
    for (const auto& row : scc_series(snapshots, scheme_name)) {
        table.rows.push_back({row.version_label, std::to_string(row.num_scc),
                              std::to_string(row.largest_scc)});
    }
    return table;
}

}  // namespace modquality
