#include "modquality/facts.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace modquality {

using nlohmann::json;

const ModuleName& ModuleScheme::module_of(const ClassId& c) const {
    auto it = membership.find(c);
    if (it == membership.end()) {
        throw NotFoundError("class '" + c + "' has no module in scheme '" + name + "'");
    }
    return it->second;
}

bool ModuleScheme::has_module(const ModuleName& m) const {
    for (const auto& [cls, mod] : membership) {
        if (mod == m) return true;
    }
    return false;
}

std::map<ModuleName, std::vector<ClassId>> ModuleScheme::modules() const {
    std::map<ModuleName, std::vector<ClassId>> out;
    for (const auto& [cls, mod] : membership) out[mod].push_back(cls);
    return out;  // std::map keys sorted; members sorted since membership is
}

std::vector<ModuleName> ModuleScheme::module_names() const {
    std::vector<ModuleName> out;
    for (const auto& [mod, members] : modules()) out.push_back(mod);
    return out;
}

const ModuleScheme& SystemSnapshot::scheme(const std::string& name) const {
    for (const auto& s : schemes) {
        if (s.name == name) return s;
    }
    throw NotFoundError("scheme '" + name + "'");
}

bool SystemSnapshot::has_scheme(const std::string& name) const {
    return std::any_of(schemes.begin(), schemes.end(),
                       [&](const ModuleScheme& s) { return s.name == name; });
}

bool SystemSnapshot::has_class(const ClassId& c) const {
    return std::binary_search(classes.begin(), classes.end(), c);
}

bool ClassDependencyGraph::has_edge(const ClassId& from, const ClassId& to) const {
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(from, to));
}

namespace {

void reject_unknown_fields(const json& obj, const std::set<std::string>& known,
                           const std::string& where, bool lenient) {
    if (lenient) return;
    for (const auto& [key, value] : obj.items()) {
        if (!known.count(key)) {
            throw ParseError("unknown field '" + key + "' in " + where +
                             " (use --lenient to ignore)");
        }
    }
}

std::int64_t require_nonneg_int(const json& v, const std::string& where) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
        throw ParseError(where + " must be a non-negative integer");
    }
    return v.get<std::int64_t>();
}

}  // namespace

SystemSnapshot normalize_snapshot(SystemSnapshot s) {
    if (s.metadata.version_label.empty()) {
        throw ValidationError("version label must be non-empty");
    }
    std::sort(s.classes.begin(), s.classes.end());
    if (auto dup = std::adjacent_find(s.classes.begin(), s.classes.end());
        dup != s.classes.end()) {
        throw ValidationError("duplicate class id '" + *dup + "'");
    }
    for (const auto& c : s.classes) {
        if (c.empty()) throw ValidationError("empty class id");
    }

    if (s.schemes.empty()) {
        throw ValidationError("snapshot must declare at least one module scheme");
    }
    std::sort(s.schemes.begin(), s.schemes.end(),
              [](const ModuleScheme& a, const ModuleScheme& b) { return a.name < b.name; });
    for (std::size_t i = 1; i < s.schemes.size(); ++i) {
        if (s.schemes[i].name == s.schemes[i - 1].name) {
            throw ValidationError("duplicate scheme name '" + s.schemes[i].name + "'");
        }
    }
    for (const auto& scheme : s.schemes) {
        if (scheme.name.empty()) throw ValidationError("empty scheme name");
        for (const auto& c : s.classes) {
            auto it = scheme.membership.find(c);
            if (it == scheme.membership.end()) {
                throw ValidationError("class '" + c + "' has no module in scheme '" +
                                      scheme.name + "'");
            }
            if (it->second.empty()) {
                throw ValidationError("class '" + c + "' maps to an empty module name in scheme '" +
                                      scheme.name + "'");
            }
        }
        for (const auto& [cls, mod] : scheme.membership) {
            if (!s.has_class(cls)) {
                throw ValidationError("scheme '" + scheme.name + "' assigns undeclared class '" +
                                      cls + "'");
            }
        }
    }

    // Merge duplicate invocation records by summing counts.
    std::map<std::pair<ClassId, ClassId>, std::int64_t> merged;
    for (const auto& e : s.invocations) {
        if (e.count < 1) {
            throw ValidationError("invocation " + e.from + " -> " + e.to +
                                  " has non-positive count");
        }
        if (!s.has_class(e.from)) {
            throw ValidationError("invocation references undeclared class '" + e.from + "'");
        }
        if (!s.has_class(e.to)) {
            throw ValidationError("invocation references undeclared class '" + e.to + "'");
        }
        merged[{e.from, e.to}] += e.count;
    }
    s.invocations.clear();
    for (const auto& [key, count] : merged) {
        s.invocations.push_back({key.first, key.second, count});
    }
    return s;
}

SystemSnapshot load_snapshot(std::istream& source, bool lenient) {
    json doc;
    try {
        doc = json::parse(source);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object()) throw ParseError("top-level document must be an object");
    reject_unknown_fields(doc, {"version", "metadata", "classes", "invocations"},
                          "top-level record", lenient);

    SystemSnapshot snap;
    if (!doc.contains("version") || !doc["version"].is_string()) {
        throw ParseError("required string field 'version' is missing");
    }
    snap.metadata.version_label = doc["version"].get<std::string>();

    if (doc.contains("metadata")) {
        const json& md = doc["metadata"];
        if (!md.is_object()) throw ParseError("'metadata' must be an object");
        reject_unknown_fields(md, {"num_methods", "lines_of_code", "generator"},
                              "metadata", lenient);
        if (md.contains("num_methods")) {
            snap.metadata.num_methods = require_nonneg_int(md["num_methods"], "num_methods");
        }
        if (md.contains("lines_of_code")) {
            snap.metadata.lines_of_code = require_nonneg_int(md["lines_of_code"], "lines_of_code");
        }
        if (md.contains("generator")) {
            if (!md["generator"].is_string()) throw ParseError("'generator' must be a string");
            snap.metadata.generator = md["generator"].get<std::string>();
        }
    }

    if (!doc.contains("classes") || !doc["classes"].is_array()) {
        throw ParseError("required array field 'classes' is missing");
    }
    std::map<std::string, ModuleScheme> schemes;
    std::size_t index = 0;
    for (const json& entry : doc["classes"]) {
        if (!entry.is_object() || !entry.contains("id") || !entry["id"].is_string()) {
            throw ParseError("classes[" + std::to_string(index) +
                             "] must be an object with a string 'id'");
        }
        reject_unknown_fields(entry, {"id", "modules"},
                              "classes[" + std::to_string(index) + "]", lenient);
        ClassId id = entry["id"].get<std::string>();
        snap.classes.push_back(id);
        if (!entry.contains("modules") || !entry["modules"].is_object()) {
            throw ParseError("classes[" + std::to_string(index) +
                             "] must carry a 'modules' object");
        }
        for (const auto& [schemeName, moduleName] : entry["modules"].items()) {
            if (!moduleName.is_string()) {
                throw ParseError("module name for class '" + id + "' in scheme '" + schemeName +
                                 "' must be a string");
            }
            auto& scheme = schemes[schemeName];
            scheme.name = schemeName;
            scheme.membership[id] = moduleName.get<std::string>();
        }
        ++index;
    }
    for (auto& [name, scheme] : schemes) snap.schemes.push_back(std::move(scheme));

    if (doc.contains("invocations")) {
        if (!doc["invocations"].is_array()) throw ParseError("'invocations' must be an array");
        index = 0;
        for (const json& entry : doc["invocations"]) {
            const std::string where = "invocations[" + std::to_string(index) + "]";
            if (!entry.is_object() || !entry.contains("from") || !entry.contains("to") ||
                !entry.contains("count")) {
                throw ParseError(where + " must be an object with 'from', 'to', 'count'");
            }
            reject_unknown_fields(entry, {"from", "to", "count"}, where, lenient);
            if (!entry["from"].is_string() || !entry["to"].is_string()) {
                throw ParseError(where + ": 'from' and 'to' must be strings");
            }
            if (!entry["count"].is_number_integer() || entry["count"].get<std::int64_t>() < 1) {
                throw ParseError(where + ": 'count' must be an integer >= 1");
            }
            snap.invocations.push_back({entry["from"].get<std::string>(),
                                        entry["to"].get<std::string>(),
                                        entry["count"].get<std::int64_t>()});
            ++index;
        }
    }

    return normalize_snapshot(std::move(snap));
}

SystemSnapshot load_snapshot_file(const std::string& path, bool lenient) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open fact file '" + path + "'");
    try {
        return load_snapshot(in, lenient);
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
}

std::string serialize_snapshot(const SystemSnapshot& s) {
    json doc;
    doc["version"] = s.metadata.version_label;
    json md = json::object();
    if (s.metadata.num_methods) md["num_methods"] = *s.metadata.num_methods;
    if (s.metadata.lines_of_code) md["lines_of_code"] = *s.metadata.lines_of_code;
    if (s.metadata.generator) md["generator"] = *s.metadata.generator;
    if (!md.empty()) doc["metadata"] = md;

    json classes = json::array();
    for (const auto& c : s.classes) {
        json mods = json::object();
        for (const auto& scheme : s.schemes) mods[scheme.name] = scheme.module_of(c);
        classes.push_back({{"id", c}, {"modules", mods}});
    }
    doc["classes"] = classes;

    json invocations = json::array();
    for (const auto& e : s.invocations) {
        invocations.push_back({{"from", e.from}, {"to", e.to}, {"count", e.count}});
    }
    doc["invocations"] = invocations;

    return doc.dump(2) + "\n";
}

ClassDependencyGraph class_dependency_graph(const SystemSnapshot& s) {
    ClassDependencyGraph g;
    g.vertices = s.classes;
    for (const auto& e : s.invocations) {
        if (e.from != e.to) g.edges.emplace_back(e.from, e.to);
    }
    // invocations are sorted and unique per (from, to), so edges already are
    return g;
}

}  // namespace modquality
