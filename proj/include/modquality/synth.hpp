#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "modquality/facts.hpp"

namespace modquality {

// Deterministic, portable random source. Built on mt19937_64, whose output
// sequence is fixed by the C++ standard; sampling avoids the standard
// distributions because their sequences are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    // uniform in [0, 1) with 53 bits of precision
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    // uniform in [0, n), rejection sampled
    std::uint64_t next_below(std::uint64_t n);

private:
    std::mt19937_64 eng_;
};

// Name of the random algorithm, recorded in generated snapshot metadata.
inline constexpr const char* kGeneratorName = "mt19937_64";

struct GeneratorConfig {
    std::uint64_t seed = 0;
    int num_classes = 1;
    // Module count of the fine "package" scheme; the coarse "plugin" scheme
    // gets ceil(num_modules / 4), at least 1.
    int num_modules = 1;
    double edge_probability = 0.0;
    // Multiplier applied to edge_probability for class pairs sharing a
    // package-scheme module, capped at 1.
    double intra_bias = 1.0;
    std::string version_label = "v1";
};

// Deterministic: identical config yields a byte-identical serialized
// snapshot. Classes are partitioned round-robin after a seeded shuffle,
// independently per scheme, so the two schemes cross-cut.
SystemSnapshot generate(const GeneratorConfig& config);

// Structural evolution operations. Applying any op to a valid snapshot
// yields a valid snapshot; the version label gains a "+<kind>" suffix.
struct SplitModule {
    std::string scheme;
    ModuleName module;
    // New module name -> member classes; parts must exactly cover the
    // module and each part must be non-empty.
    std::map<ModuleName, std::vector<ClassId>> parts;
};
struct MergeModules {
    std::string scheme;
    std::vector<ModuleName> sources;
    ModuleName target;
};
struct MoveClass {
    std::string scheme;
    ClassId cls;
    ModuleName to_module;  // existing or new
};
struct AddClass {
    ClassId cls;
    std::map<std::string, ModuleName> memberships;  // one entry per scheme
};
struct RemoveClass {
    ClassId cls;  // incident edges are removed with it
};
struct AddEdge {
    ClassId from;
    ClassId to;
    std::int64_t count = 1;  // merged by summing if the pair already exists
};
struct RemoveEdge {
    ClassId from;
    ClassId to;
};

using EvolutionOp = std::variant<SplitModule, MergeModules, MoveClass, AddClass,
                                 RemoveClass, AddEdge, RemoveEdge>;

SystemSnapshot apply(const SystemSnapshot& s, const EvolutionOp& op);

// Named restructuring-vs-evolution presets. "monolith-split" returns a pair
// where one dominant module is split into three; "organic-growth" returns a
// pair differing only by added classes and edges.
std::vector<SystemSnapshot> run_scenario(const std::string& name, std::uint64_t seed);
std::vector<std::string> scenario_names();

}  // namespace modquality
