#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modquality/error.hpp"

namespace modquality {

using ClassId = std::string;
using ModuleName = std::string;

struct SnapshotMetadata {
    std::string version_label;
    std::optional<std::int64_t> num_methods;
    std::optional<std::int64_t> lines_of_code;
    // Name of the RNG algorithm that produced a synthetic snapshot, empty
    // for snapshots loaded from external extractors.
    std::optional<std::string> generator;
};

// Normalized (from, to) pairs are unique; duplicate records are merged by
// summing counts at load time.
struct InvocationEdge {
    ClassId from;
    ClassId to;
    std::int64_t count = 1;

    friend bool operator==(const InvocationEdge&, const InvocationEdge&) = default;
};

// A total assignment of every class of the snapshot to exactly one module.
// Two instances typically coexist per snapshot: a fine "package" scheme and
// a coarse "plugin" scheme, and they may cross-cut each other.
struct ModuleScheme {
    std::string name;
    std::map<ClassId, ModuleName> membership;

    const ModuleName& module_of(const ClassId& c) const;
    bool has_module(const ModuleName& m) const;
    // Module -> sorted member classes. Every module has >= 1 member.
    std::map<ModuleName, std::vector<ClassId>> modules() const;
    std::vector<ModuleName> module_names() const;

    friend bool operator==(const ModuleScheme&, const ModuleScheme&) = default;
};

// One version's full dependency fact set. Immutable after load; safe to
// share across concurrent readers.
struct SystemSnapshot {
    SnapshotMetadata metadata;
    std::vector<ClassId> classes;       // sorted, unique
    std::vector<ModuleScheme> schemes;  // sorted by name, >= 1
    std::vector<InvocationEdge> invocations;  // normalized, sorted by (from, to)

    const ModuleScheme& scheme(const std::string& name) const;
    bool has_scheme(const std::string& name) const;
    bool has_class(const ClassId& c) const;
};

// Directed, deduplicated, binarized class dependency relation. Self-loops
// are excluded by construction.
struct ClassDependencyGraph {
    std::vector<ClassId> vertices;  // sorted
    std::vector<std::pair<ClassId, ClassId>> edges;  // sorted, unique, from != to

    bool has_edge(const ClassId& from, const ClassId& to) const;
};

// Parses and validates a fact file. Strict mode rejects unknown fields;
// lenient mode ignores them.
SystemSnapshot load_snapshot(std::istream& source, bool lenient = false);
SystemSnapshot load_snapshot_file(const std::string& path, bool lenient = false);

// Canonical serialization: loading the produced text yields an identical
// snapshot, and serializing again yields identical bytes.
std::string serialize_snapshot(const SystemSnapshot& s);

ClassDependencyGraph class_dependency_graph(const SystemSnapshot& s);

// Validates the model invariants of an in-memory snapshot and returns a
// normalized copy (sorted classes/schemes/edges, duplicate edges merged).
SystemSnapshot normalize_snapshot(SystemSnapshot s);

}  // namespace modquality
