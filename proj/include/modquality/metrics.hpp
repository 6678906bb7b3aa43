#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "modquality/facts.hpp"

namespace modquality {

// Metric values are kept as exact rationals until presentation time so that
// "same" classification across versions is an exact comparison.
using Ratio = boost::rational<boost::multiprecision::cpp_int>;

double to_double(const Ratio& r);

// Fixed-point decimal rendering with round-half-to-even, e.g. 3 digits for
// cohesion/coupling columns.
std::string format_fixed(const Ratio& r, int digits);
std::string format_fixed(double v, int digits);

struct ModuleMetricsRow {
    std::string scheme;
    ModuleName module;
    std::int64_t class_count = 0;   // N_i
    std::int64_t intra_edges = 0;   // mu_i
    Ratio cohesion;                 // A_i = mu_i / N_i^2
    Ratio coupling;                 // E_i = sum over j of eps_ij / (2 N_i N_j)
    std::int64_t ca = 0;            // distinct external classes depending on i
    std::int64_t ce = 0;            // distinct external classes i depends on
};

struct SystemMetricsSummary {
    std::string scheme;
    std::int64_t module_count = 0;
    Ratio avg_cohesion;  // unweighted mean over modules
    Ratio avg_coupling;
};

struct DescriptiveStats {
    std::string version_label;
    std::vector<std::pair<std::string, std::int64_t>> num_modules_per_scheme;  // sorted
    std::int64_t num_classes = 0;
    std::optional<std::int64_t> num_methods;
    std::optional<std::int64_t> lines_of_code;
    std::int64_t num_invocations = 0;  // sum of normalized edge counts
};

// A_i: intra-module dependency edges over N_i^2. The denominator follows the
// printed formula even though self-loops are excluded, so the attainable
// maximum is (N_i - 1) / N_i.
Ratio bunch_cohesion(const ClassDependencyGraph& g, const ModuleScheme& scheme,
                     const ModuleName& m);

// E_ij: dependency edges between i and j counted in both directions, over
// 2 N_i N_j. Symmetric in (i, j) and bounded by 1. The bidirectional count
// matches the denominator's two-directional maximum.
Ratio bunch_coupling_pair(const ClassDependencyGraph& g, const ModuleScheme& scheme,
                          const ModuleName& i, const ModuleName& j);

// E_i = sum over j != i of E_ij.
Ratio module_coupling(const ClassDependencyGraph& g, const ModuleScheme& scheme,
                      const ModuleName& i);

std::int64_t afferent_coupling(const ClassDependencyGraph& g, const ModuleScheme& scheme,
                               const ModuleName& i);
std::int64_t efferent_coupling(const ClassDependencyGraph& g, const ModuleScheme& scheme,
                               const ModuleName& i);

// One row per module, sorted by module name. Single pass over the edge set,
// equivalent to the per-module operations above.
std::vector<ModuleMetricsRow> module_metrics_table(const SystemSnapshot& s,
                                                   const std::string& scheme_name);

SystemMetricsSummary system_summary(const std::vector<ModuleMetricsRow>& rows);

DescriptiveStats descriptive_stats(const SystemSnapshot& s);

}  // namespace modquality
