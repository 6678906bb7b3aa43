#pragma once

#include <span>
#include <string>
#include <vector>

#include "modquality/facts.hpp"
#include "modquality/metrics.hpp"

namespace modquality {

struct VersionPair {
    const SystemSnapshot& from;
    const SystemSnapshot& to;

    std::string label() const;  // "X->Y"
};

enum class MetricKind { Cohesion, Coupling, Ca, Ce };

MetricKind parse_metric(const std::string& name);  // "cohesion" | "coupling" | "ca" | "ce"
std::string metric_name(MetricKind m);

struct ModuleMatch {
    std::vector<ModuleName> matched;  // present in both versions, sorted
    std::vector<ModuleName> created;  // only in `to`
    std::vector<ModuleName> removed;  // only in `from`
};

// Per-metric counts of matched modules whose value increased / stayed /
// decreased. Created and removed modules are excluded from the tallies and
// listed separately.
struct DeltaTable {
    std::string scheme;
    MetricKind metric = MetricKind::Cohesion;
    int increased = 0;
    int same = 0;
    int decreased = 0;
    std::vector<ModuleName> created;
    std::vector<ModuleName> removed;
};

struct SccSeriesRow {
    std::string version_label;
    int num_scc = 0;
    int largest_scc = 0;
};

// Matching is by exact module name; rename detection is out of scope.
ModuleMatch match_modules(const VersionPair& p, const std::string& scheme_name);

// Rational metrics (cohesion/coupling) compare exactly; Ca/Ce are integers.
DeltaTable classify_delta(const VersionPair& p, const std::string& scheme_name,
                          MetricKind metric);

std::vector<SccSeriesRow> scc_series(std::span<const SystemSnapshot> snapshots,
                                     const std::string& scheme_name);

}  // namespace modquality
