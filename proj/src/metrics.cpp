#include "modquality/metrics.hpp"

#include <algorithm>
#include <cfenv>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

namespace modquality {

namespace mp = boost::multiprecision;

double to_double(const Ratio& r) {
    return r.numerator().convert_to<double>() / r.denominator().convert_to<double>();
}

namespace {

mp::cpp_int pow10(int digits) {
    mp::cpp_int p = 1;
    for (int i = 0; i < digits; ++i) p *= 10;
    return p;
}

std::string render_scaled(mp::cpp_int scaled, int digits) {
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::string s = scaled.str();
    if (static_cast<int>(s.size()) <= digits) {
        s.insert(0, digits + 1 - s.size(), '0');
    }
    if (digits > 0) s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
}

void require_module(const ModuleScheme& scheme, const ModuleName& m) {
    if (!scheme.has_module(m)) {
        throw NotFoundError("module '" + m + "' in scheme '" + scheme.name + "'");
    }
}

}  // namespace

std::string format_fixed(const Ratio& r, int digits) {
    // round-half-to-even on the exact rational
    mp::cpp_int num = r.numerator() * pow10(digits);
    mp::cpp_int den = r.denominator();  // > 0 by boost::rational invariant
    bool neg = num < 0;
    if (neg) num = -num;
    mp::cpp_int q = num / den;
    mp::cpp_int rem = num % den;
    mp::cpp_int twice = rem * 2;
    if (twice > den || (twice == den && q % 2 == 1)) ++q;
    return render_scaled(neg ? -q : q, digits);
}

std::string format_fixed(double v, int digits) {
    double scale = std::pow(10.0, digits);
    // nearbyint under the default rounding mode ties to even
    double scaled = std::nearbyint(v * scale);
    return render_scaled(mp::cpp_int(static_cast<long long>(scaled)), digits);
}

Ratio bunch_cohesion(const ClassDependencyGraph& g, const ModuleScheme& scheme,
                     const ModuleName& m) {
    require_module(scheme, m);
    std::int64_t n = 0;
    for (const auto& [cls, mod] : scheme.membership) {
        if (mod == m) ++n;
    }
    std::int64_t mu = 0;
    for (const auto& [from, to] : g.edges) {
        if (scheme.module_of(from) == m && scheme.module_of(to) == m) ++mu;
    }
    return Ratio(mu, mp::cpp_int(n) * n);
}

Ratio bunch_coupling_pair(const ClassDependencyGraph& g, const ModuleScheme& scheme,
                          const ModuleName& i, const ModuleName& j) {
    if (i == j) throw InvalidArgumentError("coupling pair requires two distinct modules");
    require_module(scheme, i);
    require_module(scheme, j);
    std::int64_t ni = 0, nj = 0;
    for (const auto& [cls, mod] : scheme.membership) {
        if (mod == i) ++ni;
        if (mod == j) ++nj;
    }
    std::int64_t eps = 0;  // edges in both directions between i and j
    for (const auto& [from, to] : g.edges) {
        const auto& mf = scheme.module_of(from);
        const auto& mt = scheme.module_of(to);
        if ((mf == i && mt == j) || (mf == j && mt == i)) ++eps;
    }
    return Ratio(eps, 2 * mp::cpp_int(ni) * nj);
}

Ratio module_coupling(const ClassDependencyGraph& g, const ModuleScheme& scheme,
                      const ModuleName& i) {
    require_module(scheme, i);
    Ratio total(0);
    for (const auto& j : scheme.module_names()) {
        if (j != i) total += bunch_coupling_pair(g, scheme, i, j);
    }
    return total;
}

std::int64_t afferent_coupling(const ClassDependencyGraph& g, const ModuleScheme& scheme,
                               const ModuleName& i) {
    require_module(scheme, i);
    std::unordered_set<std::string> sources;
    for (const auto& [from, to] : g.edges) {
        if (scheme.module_of(from) != i && scheme.module_of(to) == i) sources.insert(from);
    }
    return static_cast<std::int64_t>(sources.size());
}

std::int64_t efferent_coupling(const ClassDependencyGraph& g, const ModuleScheme& scheme,
                               const ModuleName& i) {
    require_module(scheme, i);
    std::unordered_set<std::string> targets;
    for (const auto& [from, to] : g.edges) {
        if (scheme.module_of(from) == i && scheme.module_of(to) != i) targets.insert(to);
    }
    return static_cast<std::int64_t>(targets.size());
}

std::vector<ModuleMetricsRow> module_metrics_table(const SystemSnapshot& s,
                                                   const std::string& scheme_name) {
    const ModuleScheme& scheme = s.scheme(scheme_name);
    const auto modules = scheme.modules();

    std::vector<ModuleName> names;
    std::unordered_map<std::string, int> module_index;
    std::vector<std::int64_t> sizes;
    for (const auto& [mod, members] : modules) {
        module_index.emplace(mod, static_cast<int>(names.size()));
        names.push_back(mod);
        sizes.push_back(static_cast<std::int64_t>(members.size()));
    }
    const int m = static_cast<int>(names.size());

    std::unordered_map<std::string, int> class_module;
    class_module.reserve(scheme.membership.size());
    for (const auto& [cls, mod] : scheme.membership) {
        class_module.emplace(cls, module_index.at(mod));
    }

    std::vector<std::int64_t> mu(m, 0);
    // symmetric cross-module edge counts, keyed by (min, max) module index
    std::unordered_map<std::int64_t, std::int64_t> eps;
    std::vector<std::unordered_set<std::string>> ca_sets(m), ce_sets(m);

    const ClassDependencyGraph g = class_dependency_graph(s);
    for (const auto& [from, to] : g.edges) {
        int a = class_module.at(from);
        int b = class_module.at(to);
        if (a == b) {
            ++mu[a];
        } else {
            std::int64_t lo = std::min(a, b), hi = std::max(a, b);
            ++eps[lo * static_cast<std::int64_t>(m) + hi];
            ce_sets[a].insert(to);
            ca_sets[b].insert(from);
        }
    }

    std::vector<Ratio> coupling(m, Ratio(0));
    for (const auto& [key, count] : eps) {
        int lo = static_cast<int>(key / m), hi = static_cast<int>(key % m);
        Ratio e(count, 2 * mp::cpp_int(sizes[lo]) * sizes[hi]);
        coupling[lo] += e;
        coupling[hi] += e;
    }

    std::vector<ModuleMetricsRow> rows;
    rows.reserve(m);
    for (int k = 0; k < m; ++k) {
        ModuleMetricsRow row;
        row.scheme = scheme_name;
        row.module = names[k];
        row.class_count = sizes[k];
        row.intra_edges = mu[k];
        row.cohesion = Ratio(mu[k], mp::cpp_int(sizes[k]) * sizes[k]);
        row.coupling = coupling[k];
        row.ca = static_cast<std::int64_t>(ca_sets[k].size());
        row.ce = static_cast<std::int64_t>(ce_sets[k].size());
        rows.push_back(std::move(row));
    }
    return rows;  // modules() iterates sorted, so rows are sorted by name
}

SystemMetricsSummary system_summary(const std::vector<ModuleMetricsRow>& rows) {
    if (rows.empty()) throw InvalidArgumentError("system summary over an empty row list");
    SystemMetricsSummary out;
    out.scheme = rows.front().scheme;
    out.module_count = static_cast<std::int64_t>(rows.size());
    Ratio coh(0), cpl(0);
    for (const auto& row : rows) {
        if (row.scheme != out.scheme) {
            throw InvalidArgumentError("system summary rows must share one scheme");
        }
        coh += row.cohesion;
        cpl += row.coupling;
    }
    out.avg_cohesion = coh / Ratio(out.module_count);
    out.avg_coupling = cpl / Ratio(out.module_count);
    return out;
}

DescriptiveStats descriptive_stats(const SystemSnapshot& s) {
    DescriptiveStats out;
    out.version_label = s.metadata.version_label;
    for (const auto& scheme : s.schemes) {
        out.num_modules_per_scheme.emplace_back(
            scheme.name, static_cast<std::int64_t>(scheme.modules().size()));
    }
    out.num_classes = static_cast<std::int64_t>(s.classes.size());
    out.num_methods = s.metadata.num_methods;
    out.lines_of_code = s.metadata.lines_of_code;
    for (const auto& e : s.invocations) out.num_invocations += e.count;
    return out;
}

}  // namespace modquality
