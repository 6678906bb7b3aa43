#pragma once

#include <span>
#include <string>
#include <vector>

#include "modquality/evolution.hpp"
#include "modquality/facts.hpp"
#include "modquality/metrics.hpp"
#include "modquality/modgraph.hpp"

namespace modquality {

enum class OutputFormat { Text, Csv, Structured };

OutputFormat parse_format(const std::string& name);  // "text" | "csv" | "structured"

// A rendered-ready table: every cell is already formatted, so all output
// formats carry exactly the same values.
struct Table {
    std::string title;
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
};

std::string render_table(const Table& table, OutputFormat format);
std::string render_tables(std::span<const Table> tables, OutputFormat format);
Table parse_structured_table(const std::string& text);  // inverse of Structured rendering

// Section builders. Cohesion/coupling cells use 3 decimal places with
// round-half-to-even; integers render verbatim; missing metadata renders as
// "unknown".
Table stats_table(std::span<const SystemSnapshot> snapshots);
Table metrics_table(const SystemSnapshot& s, const std::string& scheme_name);
Table summary_table(std::span<const SystemSnapshot> snapshots, const std::string& scheme_name);
Table delta_table(const DeltaTable& delta);
Table deltas_table(const VersionPair& pair, const std::string& scheme_name,
                   std::span<const MetricKind> metrics);
Table scc_table(std::span<const SystemSnapshot> snapshots, const std::string& scheme_name);

}  // namespace modquality
