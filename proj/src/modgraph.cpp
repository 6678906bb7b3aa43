#include "modquality/modgraph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

namespace modquality {

ModuleDependencyGraph lift_module_graph(const ClassDependencyGraph& g,
                                        const ModuleScheme& scheme) {
    ModuleDependencyGraph mg;
    mg.scheme = scheme.name;

    std::set<ModuleName> vertices;
    for (const auto& v : g.vertices) {
        vertices.insert(scheme.module_of(v));  // throws on missing membership
    }
    mg.vertices.assign(vertices.begin(), vertices.end());

    std::set<std::pair<ModuleName, ModuleName>> edges;
    for (const auto& [from, to] : g.edges) {
        const auto& mf = scheme.module_of(from);
        const auto& mt = scheme.module_of(to);
        if (mf != mt) edges.emplace(mf, mt);
    }
    mg.edges.assign(edges.begin(), edges.end());
    return mg;
}

namespace {

// Iterative Tarjan; returns all SCCs (including singletons) as index lists.
std::vector<std::vector<int>> tarjan_sccs(int n, const std::vector<std::vector<int>>& adj) {
    std::vector<int> index(n, -1), lowlink(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    std::vector<std::vector<int>> sccs;
    int next_index = 0;

    struct Frame {
        int v;
        std::size_t child = 0;
    };

    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> frames{{root}};
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.child < adj[f.v].size()) {
                int w = adj[f.v][f.child++];
                if (index[w] == -1) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w});
                } else if (on_stack[w]) {
                    lowlink[f.v] = std::min(lowlink[f.v], index[w]);
                }
            } else {
                if (lowlink[f.v] == index[f.v]) {
                    std::vector<int> scc;
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        scc.push_back(w);
                    } while (w != f.v);
                    sccs.push_back(std::move(scc));
                }
                int v = f.v;
                frames.pop_back();
                if (!frames.empty()) {
                    lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[v]);
                }
            }
        }
    }
    return sccs;
}

}  // namespace

SccReport scc_analysis(const ModuleDependencyGraph& mg) {
    const int n = static_cast<int>(mg.vertices.size());
    std::unordered_map<std::string, int> idx;
    for (int i = 0; i < n; ++i) idx.emplace(mg.vertices[i], i);

    std::vector<std::vector<int>> adj(n);
    for (const auto& [from, to] : mg.edges) adj[idx.at(from)].push_back(idx.at(to));

    SccReport report;
    report.scheme = mg.scheme;
    for (auto& scc : tarjan_sccs(n, adj)) {
        if (scc.size() < 2) continue;
        std::vector<ModuleName> members;
        members.reserve(scc.size());
        for (int v : scc) members.push_back(mg.vertices[v]);
        std::sort(members.begin(), members.end());
        report.scc_members.push_back(std::move(members));
    }
    std::sort(report.scc_members.begin(), report.scc_members.end(),
              [](const auto& a, const auto& b) {
                  if (a.size() != b.size()) return a.size() > b.size();
                  return a < b;
              });
    report.num_nontrivial_scc = static_cast<int>(report.scc_members.size());
    report.largest_scc_size =
        report.scc_members.empty() ? 0 : static_cast<int>(report.scc_members.front().size());
    return report;
}

std::string export_edge_list(const ModuleDependencyGraph& mg) {
    std::ostringstream out;
    for (const auto& [from, to] : mg.edges) out << from << " -> " << to << "\n";
    return out.str();
}

}  // namespace modquality
