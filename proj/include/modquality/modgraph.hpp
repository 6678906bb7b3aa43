#pragma once

#include <string>
#include <utility>
#include <vector>

#include "modquality/facts.hpp"

namespace modquality {

// Module-level lift of the class dependency graph. Intra-module class edges
// are not lifted, so there are no self-loops.
struct ModuleDependencyGraph {
    std::string scheme;
    std::vector<ModuleName> vertices;  // sorted
    std::vector<std::pair<ModuleName, ModuleName>> edges;  // sorted, unique, from != to
};

struct SccReport {
    std::string scheme;
    // Only components with >= 2 vertices count: a lone vertex carries no
    // cycle information at module level.
    int num_nontrivial_scc = 0;
    int largest_scc_size = 0;  // 0 when the module graph is acyclic
    // Sorted by size descending, then lexicographically by first member.
    // Members within a component are sorted.
    std::vector<std::vector<ModuleName>> scc_members;
};

// Edge (i, j) present iff some class of i depends on some class of j.
ModuleDependencyGraph lift_module_graph(const ClassDependencyGraph& g,
                                        const ModuleScheme& scheme);

// Tarjan's algorithm (iterative); deterministic output ordering.
SccReport scc_analysis(const ModuleDependencyGraph& mg);

// Plain-text exchange format: one directed edge per line, "<from> -> <to>".
std::string export_edge_list(const ModuleDependencyGraph& mg);

}  // namespace modquality
