#include "modquality/evolution.hpp"

#include <algorithm>
#include <map>

#include "modquality/modgraph.hpp"

namespace modquality {

std::string VersionPair::label() const {
    return from.metadata.version_label + "->" + to.metadata.version_label;
}

MetricKind parse_metric(const std::string& name) {
    if (name == "cohesion") return MetricKind::Cohesion;
    if (name == "coupling") return MetricKind::Coupling;
    if (name == "ca") return MetricKind::Ca;
    if (name == "ce") return MetricKind::Ce;
    throw InvalidArgumentError("unknown metric '" + name +
                               "' (expected cohesion, coupling, ca or ce)");
}

std::string metric_name(MetricKind m) {
    switch (m) {
        case MetricKind::Cohesion: return "cohesion";
        case MetricKind::Coupling: return "coupling";
        case MetricKind::Ca: return "ca";
        case MetricKind::Ce: return "ce";
    }
    throw InvalidArgumentError("invalid metric kind");
}

ModuleMatch match_modules(const VersionPair& p, const std::string& scheme_name) {
    const auto from_modules = p.from.scheme(scheme_name).module_names();
    const auto to_modules = p.to.scheme(scheme_name).module_names();

    ModuleMatch out;
    std::set_intersection(from_modules.begin(), from_modules.end(), to_modules.begin(),
                          to_modules.end(), std::back_inserter(out.matched));
    std::set_difference(to_modules.begin(), to_modules.end(), from_modules.begin(),
                        from_modules.end(), std::back_inserter(out.created));
    std::set_difference(from_modules.begin(), from_modules.end(), to_modules.begin(),
                        to_modules.end(), std::back_inserter(out.removed));
    return out;
}

DeltaTable classify_delta(const VersionPair& p, const std::string& scheme_name,
                          MetricKind metric) {
    const ModuleMatch match = match_modules(p, scheme_name);

    std::map<ModuleName, ModuleMetricsRow> from_rows, to_rows;
    for (auto& row : module_metrics_table(p.from, scheme_name)) from_rows[row.module] = row;
    for (auto& row : module_metrics_table(p.to, scheme_name)) to_rows[row.module] = row;

    DeltaTable table;
    table.scheme = scheme_name;
    table.metric = metric;
    table.created = match.created;
    table.removed = match.removed;

    for (const auto& mod : match.matched) {
        const ModuleMetricsRow& a = from_rows.at(mod);
        const ModuleMetricsRow& b = to_rows.at(mod);
        int cmp = 0;
        switch (metric) {
            case MetricKind::Cohesion:
                cmp = b.cohesion < a.cohesion ? -1 : (a.cohesion < b.cohesion ? 1 : 0);
                break;
            case MetricKind::Coupling:
                cmp = b.coupling < a.coupling ? -1 : (a.coupling < b.coupling ? 1 : 0);
                break;
            case MetricKind::Ca:
                cmp = b.ca < a.ca ? -1 : (a.ca < b.ca ? 1 : 0);
                break;
            case MetricKind::Ce:
                cmp = b.ce < a.ce ? -1 : (a.ce < b.ce ? 1 : 0);
                break;
        }
        if (cmp > 0) ++table.increased;
        else if (cmp < 0) ++table.decreased;
        else ++table.same;
    }
    return table;
}

std::vector<SccSeriesRow> scc_series(std::span<const SystemSnapshot> snapshots,
                                     const std::string& scheme_name) {
    if (snapshots.empty()) throw InvalidArgumentError("scc series needs at least one snapshot");
    std::vector<SccSeriesRow> rows;
    rows.reserve(snapshots.size());
    for (const SystemSnapshot& s : snapshots) {
        const auto mg = lift_module_graph(class_dependency_graph(s), s.scheme(scheme_name));
        const SccReport report = scc_analysis(mg);
        rows.push_back({s.metadata.version_label, report.num_nontrivial_scc,
                        report.largest_scc_size});
    }
    return rows;
}

}  // namespace modquality
