#include "modquality/synth.hpp"

#include <algorithm>
#include <set>

namespace modquality {

std::uint64_t Rng::next_below(std::uint64_t n) {
    if (n == 0) throw InvalidArgumentError("next_below(0)");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % n;
}

namespace {

std::string padded(const std::string& prefix, int value, int width) {
    std::string digits = std::to_string(value);
    if (static_cast<int>(digits.size()) < width) {
        digits.insert(0, width - digits.size(), '0');
    }
    return prefix + digits;
}

int width_for(int count) {
    int w = 1;
    for (int v = count - 1; v >= 10; v /= 10) ++w;
    return std::max(w, 2);
}

// Seeded shuffle + round-robin assignment of class indices to modules.
std::vector<int> assign_modules(int num_classes, int num_modules, Rng& rng) {
    std::vector<int> order(num_classes);
    for (int i = 0; i < num_classes; ++i) order[i] = i;
    for (int i = num_classes - 1; i > 0; --i) {
        int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
        std::swap(order[i], order[j]);
    }
    std::vector<int> module_of(num_classes);
    for (int pos = 0; pos < num_classes; ++pos) module_of[order[pos]] = pos % num_modules;
    return module_of;
}

}  // namespace

SystemSnapshot generate(const GeneratorConfig& config) {
    if (config.num_classes < 1) throw InvalidArgumentError("num_classes must be >= 1");
    if (config.num_modules < 1) throw InvalidArgumentError("num_modules must be >= 1");
    if (config.num_modules > config.num_classes) {
        throw InvalidArgumentError("num_modules must not exceed num_classes");
    }
    if (config.edge_probability < 0.0 || config.edge_probability > 1.0) {
        throw InvalidArgumentError("edge_probability must lie in [0, 1]");
    }
    if (config.intra_bias < 1.0) throw InvalidArgumentError("intra_bias must be >= 1");
    if (config.version_label.empty()) throw InvalidArgumentError("version_label must be non-empty");

    Rng rng(config.seed);
    const int n = config.num_classes;
    const int pkg_modules = config.num_modules;
    const int plg_modules = std::max(1, (config.num_modules + 3) / 4);

    SystemSnapshot snap;
    snap.metadata.version_label = config.version_label;
    snap.metadata.generator = kGeneratorName;

    const int cw = width_for(n);
    for (int i = 0; i < n; ++i) snap.classes.push_back(padded("c", i, cw));

    const std::vector<int> pkg_of = assign_modules(n, pkg_modules, rng);
    const std::vector<int> plg_of = assign_modules(n, plg_modules, rng);

    ModuleScheme pkg{.name = "package"};
    ModuleScheme plg{.name = "plugin"};
    const int pw = width_for(pkg_modules), lw = width_for(plg_modules);
    for (int i = 0; i < n; ++i) {
        pkg.membership[snap.classes[i]] = padded("pkg", pkg_of[i], pw);
        plg.membership[snap.classes[i]] = padded("plg", plg_of[i], lw);
    }
    snap.schemes = {pkg, plg};

    const double p_inter = config.edge_probability;
    const double p_intra = std::min(1.0, config.edge_probability * config.intra_bias);
    for (int from = 0; from < n; ++from) {
        for (int to = 0; to < n; ++to) {
            if (from == to) continue;
            const double p = pkg_of[from] == pkg_of[to] ? p_intra : p_inter;
            if (rng.next_unit() < p) {
                const std::int64_t count = 1 + static_cast<std::int64_t>(rng.next_below(3));
                snap.invocations.push_back({snap.classes[from], snap.classes[to], count});
            }
        }
    }

    return normalize_snapshot(std::move(snap));
}

namespace {

ModuleScheme& mutable_scheme(SystemSnapshot& s, const std::string& name) {
    for (auto& scheme : s.schemes) {
        if (scheme.name == name) return scheme;
    }
    throw NotFoundError("scheme '" + name + "'");
}

struct OpApplier {
    SystemSnapshot& s;

    std::string operator()(const SplitModule& op) {
        ModuleScheme& scheme = mutable_scheme(s, op.scheme);
        std::vector<ClassId> members;
        for (const auto& [cls, mod] : scheme.membership) {
            if (mod == op.module) members.push_back(cls);
        }
        if (members.empty()) {
            throw NotFoundError("module '" + op.module + "' in scheme '" + op.scheme + "'");
        }
        std::set<ClassId> covered;
        for (const auto& [part, classes] : op.parts) {
            if (classes.empty()) {
                throw ValidationError("split part '" + part + "' would be empty");
            }
            if (part != op.module && scheme.has_module(part)) {
                throw ValidationError("split part '" + part + "' already exists");
            }
            for (const auto& cls : classes) {
                if (scheme.membership.count(cls) == 0 || scheme.membership.at(cls) != op.module) {
                    throw NotFoundError("class '" + cls + "' is not a member of module '" +
                                        op.module + "'");
                }
                if (!covered.insert(cls).second) {
                    throw ValidationError("class '" + cls + "' listed in two split parts");
                }
            }
        }
        if (covered.size() != members.size()) {
            throw ValidationError("split parts must cover all members of '" + op.module + "'");
        }
        for (const auto& [part, classes] : op.parts) {
            for (const auto& cls : classes) scheme.membership[cls] = part;
        }
        return "split";
    }

    std::string operator()(const MergeModules& op) {
        ModuleScheme& scheme = mutable_scheme(s, op.scheme);
        if (op.sources.empty()) throw InvalidArgumentError("merge needs at least one source");
        if (op.target.empty()) throw InvalidArgumentError("merge target must be non-empty");
        for (const auto& src : op.sources) {
            if (!scheme.has_module(src)) {
                throw NotFoundError("module '" + src + "' in scheme '" + op.scheme + "'");
            }
        }
        for (auto& [cls, mod] : scheme.membership) {
            if (std::find(op.sources.begin(), op.sources.end(), mod) != op.sources.end()) {
                mod = op.target;
            }
        }
        return "merge";
    }

    std::string operator()(const MoveClass& op) {
        ModuleScheme& scheme = mutable_scheme(s, op.scheme);
        auto it = scheme.membership.find(op.cls);
        if (it == scheme.membership.end()) throw NotFoundError("class '" + op.cls + "'");
        if (op.to_module.empty()) throw InvalidArgumentError("target module must be non-empty");
        const ModuleName from_module = it->second;
        if (from_module != op.to_module) {
            std::size_t remaining = 0;
            for (const auto& [cls, mod] : scheme.membership) {
                if (mod == from_module) ++remaining;
            }
            if (remaining == 1) {
                throw ValidationError("moving '" + op.cls + "' would empty module '" +
                                      from_module + "'");
            }
        }
        it->second = op.to_module;
        return "move";
    }

    std::string operator()(const AddClass& op) {
        if (s.has_class(op.cls)) throw ValidationError("class '" + op.cls + "' already exists");
        for (auto& scheme : s.schemes) {
            auto it = op.memberships.find(scheme.name);
            if (it == op.memberships.end()) {
                throw ValidationError("new class '" + op.cls + "' lacks a module in scheme '" +
                                      scheme.name + "'");
            }
            scheme.membership[op.cls] = it->second;
        }
        for (const auto& [schemeName, mod] : op.memberships) {
            if (!s.has_scheme(schemeName)) throw NotFoundError("scheme '" + schemeName + "'");
        }
        s.classes.push_back(op.cls);
        return "addclass";
    }

    std::string operator()(const RemoveClass& op) {
        if (!s.has_class(op.cls)) throw NotFoundError("class '" + op.cls + "'");
        for (auto& scheme : s.schemes) {
            const ModuleName mod = scheme.module_of(op.cls);
            std::size_t remaining = 0;
            for (const auto& [cls, m] : scheme.membership) {
                if (m == mod) ++remaining;
            }
            if (remaining == 1) {
                throw ValidationError("removing '" + op.cls + "' would empty module '" + mod +
                                      "' in scheme '" + scheme.name + "'");
            }
        }
        for (auto& scheme : s.schemes) scheme.membership.erase(op.cls);
        std::erase(s.classes, op.cls);
        std::erase_if(s.invocations, [&](const InvocationEdge& e) {
            return e.from == op.cls || e.to == op.cls;
        });
        return "rmclass";
    }

    std::string operator()(const AddEdge& op) {
        if (!s.has_class(op.from)) throw NotFoundError("class '" + op.from + "'");
        if (!s.has_class(op.to)) throw NotFoundError("class '" + op.to + "'");
        if (op.count < 1) throw InvalidArgumentError("edge count must be >= 1");
        s.invocations.push_back({op.from, op.to, op.count});
        return "addedge";
    }

    std::string operator()(const RemoveEdge& op) {
        auto it = std::find_if(s.invocations.begin(), s.invocations.end(),
                               [&](const InvocationEdge& e) {
                                   return e.from == op.from && e.to == op.to;
                               });
        if (it == s.invocations.end()) {
            throw NotFoundError("invocation edge " + op.from + " -> " + op.to);
        }
        s.invocations.erase(it);
        return "rmedge";
    }
};

}  // namespace

SystemSnapshot apply(const SystemSnapshot& s, const EvolutionOp& op) {
    SystemSnapshot next = s;
    const std::string kind = std::visit(OpApplier{next}, op);
    next.metadata.version_label += "+" + kind;
    return normalize_snapshot(std::move(next));
}

std::vector<std::string> scenario_names() { return {"monolith-split", "organic-growth"}; }

std::vector<SystemSnapshot> run_scenario(const std::string& name, std::uint64_t seed) {
    if (name == "monolith-split") {
        // One dominant package absorbs most of the system, then is split in
        // three. Module count strictly increases across the pair.
        GeneratorConfig config{.seed = seed,
                               .num_classes = 40,
                               .num_modules = 8,
                               .edge_probability = 0.08,
                               .intra_bias = 4.0,
                               .version_label = "v1"};
        SystemSnapshot base = generate(config);
        SystemSnapshot v1 = apply(
            base, MergeModules{.scheme = "package",
                               .sources = {"pkg00", "pkg01", "pkg02", "pkg03", "pkg04"},
                               .target = "core"});
        v1.metadata.version_label = "v1";

        const auto members = v1.scheme("package").modules().at("core");
        std::map<ModuleName, std::vector<ClassId>> parts;
        for (std::size_t i = 0; i < members.size(); ++i) {
            static const char* names[] = {"core.a", "core.b", "core.c"};
            parts[names[i % 3]].push_back(members[i]);
        }
        SystemSnapshot v2 = apply(
            v1, SplitModule{.scheme = "package", .module = "core", .parts = parts});
        v2.metadata.version_label = "v2";
        return {v1, v2};
    }
    if (name == "organic-growth") {
        // Additive change only: new classes joining existing modules plus new
        // edges. The module set is identical across the pair.
        GeneratorConfig config{.seed = seed,
                               .num_classes = 30,
                               .num_modules = 5,
                               .edge_probability = 0.10,
                               .intra_bias = 4.0,
                               .version_label = "v1"};
        SystemSnapshot v1 = generate(config);
        Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);

        SystemSnapshot v2 = v1;
        const auto pkg_names = v1.scheme("package").module_names();
        const auto plg_names = v1.scheme("plugin").module_names();
        for (int i = 0; i < 5; ++i) {
            AddClass op;
            op.cls = padded("g", i, 2);
            op.memberships["package"] = pkg_names[rng.next_below(pkg_names.size())];
            op.memberships["plugin"] = plg_names[rng.next_below(plg_names.size())];
            v2 = apply(v2, op);
        }
        for (int i = 0; i < 25; ++i) {
            const auto& from = v2.classes[rng.next_below(v2.classes.size())];
            const auto& to = v2.classes[rng.next_below(v2.classes.size())];
            if (from == to) continue;
            v2 = apply(v2, AddEdge{.from = from, .to = to, .count = 1});
        }
        v2.metadata.version_label = "v2";
        return {v1, v2};
    }
    throw NotFoundError("scenario '" + name + "' (known: monolith-split, organic-growth)");
}

}  // namespace modquality
