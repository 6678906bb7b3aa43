#include "modquality/synth.hpp"

#include <gtest/gtest.h>

#include "modquality/metrics.hpp"
#include "test_util.hpp"

using namespace modquality;

TEST(Generate, ZeroProbabilityYieldsNoEdges) {
    const auto s = generate({.seed = 1, .num_classes = 4, .num_modules = 2,
                             .edge_probability = 0.0});
    EXPECT_TRUE(s.invocations.empty());
    EXPECT_EQ(s.classes.size(), 4u);
    EXPECT_EQ(s.schemes.size(), 2u);
    EXPECT_EQ(s.metadata.generator, kGeneratorName);
}

TEST(Generate, DeterministicAcrossRuns) {
    const GeneratorConfig config{.seed = 1, .num_classes = 20, .num_modules = 4,
                                 .edge_probability = 0.2, .intra_bias = 2.0};
    EXPECT_EQ(serialize_snapshot(generate(config)), serialize_snapshot(generate(config)));
}

TEST(Generate, DifferentSeedsDiffer) {
    GeneratorConfig config{.seed = 1, .num_classes = 20, .num_modules = 4,
                           .edge_probability = 0.2};
    const auto a = serialize_snapshot(generate(config));
    config.seed = 2;
    EXPECT_NE(a, serialize_snapshot(generate(config)));
}

TEST(Generate, IntraBiasSkewsEdgeMix) {
    const auto s = generate({.seed = 7, .num_classes = 30, .num_modules = 5,
                             .edge_probability = 0.1, .intra_bias = 4.0});
    const auto& pkg = s.scheme("package");
    std::int64_t intra = 0, inter = 0;
    std::int64_t intra_pairs = 0, inter_pairs = 0;
    for (const auto& a : s.classes) {
        for (const auto& b : s.classes) {
            if (a == b) continue;
            (pkg.module_of(a) == pkg.module_of(b) ? intra_pairs : inter_pairs)++;
        }
    }
    for (const auto& e : s.invocations) {
        (pkg.module_of(e.from) == pkg.module_of(e.to) ? intra : inter)++;
    }
    const double intra_fraction = static_cast<double>(intra) / intra_pairs;
    const double inter_fraction = static_cast<double>(inter) / inter_pairs;
    EXPECT_GT(intra_fraction, inter_fraction);
}

TEST(Generate, ModuleCoverage) {
    const auto s = generate({.seed = 3, .num_classes = 12, .num_modules = 5,
                             .edge_probability = 0.0});
    EXPECT_EQ(s.scheme("package").module_names().size(), 5u);
    // plugin scheme is coarser
    EXPECT_LT(s.scheme("plugin").module_names().size(), 5u);
}

TEST(Generate, InvalidConfigRejected) {
    EXPECT_THROW(generate({.seed = 1, .num_classes = 0}), InvalidArgumentError);
    EXPECT_THROW(generate({.seed = 1, .num_classes = 2, .num_modules = 3}),
                 InvalidArgumentError);
    EXPECT_THROW(generate({.seed = 1, .num_classes = 2, .num_modules = 1,
                           .edge_probability = 1.5}),
                 InvalidArgumentError);
    EXPECT_THROW(generate({.seed = 1, .num_classes = 2, .num_modules = 1,
                           .edge_probability = 0.5, .intra_bias = 0.5}),
                 InvalidArgumentError);
}

namespace {

SystemSnapshot sample() {
    return generate({.seed = 42, .num_classes = 12, .num_modules = 4,
                     .edge_probability = 0.2, .intra_bias = 2.0});
}

}  // namespace

TEST(Apply, SplitThenMergeRestoresStructure) {
    const auto s = sample();
    const auto members = s.scheme("package").modules().at("pkg00");
    ASSERT_GE(members.size(), 2u);
    std::map<ModuleName, std::vector<ClassId>> parts;
    parts["pkg00.x"].push_back(members[0]);
    for (std::size_t i = 1; i < members.size(); ++i) parts["pkg00.y"].push_back(members[i]);

    const auto split = apply(s, SplitModule{"package", "pkg00", parts});
    EXPECT_EQ(split.scheme("package").module_names().size(),
              s.scheme("package").module_names().size() + 1);
    EXPECT_EQ(split.metadata.version_label, "v1+split");

    const auto merged = apply(
        split, MergeModules{"package", {"pkg00.x", "pkg00.y"}, "pkg00"});
    EXPECT_EQ(merged.scheme("package"), s.scheme("package"));
    EXPECT_EQ(merged.invocations, s.invocations);
    EXPECT_EQ(merged.classes, s.classes);
}

TEST(Apply, MoveClassLeavesDependencyGraphUnchanged) {
    const auto s = sample();
    // pick a class whose package module has another member
    const auto modules = s.scheme("package").modules();
    std::string victim;
    std::string target;
    for (const auto& [mod, members] : modules) {
        if (members.size() >= 2) {
            victim = members.front();
            for (const auto& [other, om] : modules) {
                if (other != mod) target = other;
            }
        }
    }
    ASSERT_FALSE(victim.empty());
    const auto moved = apply(s, MoveClass{"package", victim, target});
    const auto before = class_dependency_graph(s);
    const auto after = class_dependency_graph(moved);
    EXPECT_EQ(before.edges, after.edges);
    EXPECT_EQ(before.vertices, after.vertices);
}

TEST(Apply, AddIntraEdgeBumpsMuByOne) {
    const auto s = generate({.seed = 5, .num_classes = 9, .num_modules = 3,
                             .edge_probability = 0.0});
    const auto members = s.scheme("package").modules().at("pkg00");
    ASSERT_GE(members.size(), 2u);
    const auto next = apply(s, AddEdge{members[0], members[1], 1});
    const auto& scheme = next.scheme("package");
    EXPECT_EQ(bunch_cohesion(class_dependency_graph(next), scheme, "pkg00"),
              Ratio(1, static_cast<std::int64_t>(members.size()) *
                           static_cast<std::int64_t>(members.size())));
}

TEST(Apply, DanglingReferencesRejected) {
    const auto s = sample();
    EXPECT_THROW(apply(s, AddEdge{"ghost", s.classes[0], 1}), NotFoundError);
    EXPECT_THROW(apply(s, RemoveEdge{"ghost", s.classes[0]}), NotFoundError);
    EXPECT_THROW(apply(s, MoveClass{"package", "ghost", "pkg00"}), NotFoundError);
    EXPECT_THROW(apply(s, RemoveClass{"ghost"}), NotFoundError);
}

TEST(Apply, EmptyingAModuleRejected) {
    const auto s = testutil::make_snapshot(
        "v", {{"a", {{"package", "P"}, {"plugin", "X"}}},
              {"b", {{"package", "Q"}, {"plugin", "X"}}}},
        {});
    EXPECT_THROW(apply(s, MoveClass{"package", "a", "Q"}), ValidationError);
    EXPECT_THROW(apply(s, RemoveClass{"a"}), ValidationError);
}

TEST(Apply, PackageOpsDoNotTouchPluginScheme) {
    const auto s = sample();
    const auto members = s.scheme("package").modules().at("pkg01");
    std::map<ModuleName, std::vector<ClassId>> parts;
    for (std::size_t i = 0; i < members.size(); ++i) {
        parts[i % 2 == 0 ? "left" : "right"].push_back(members[i]);
    }
    if (parts.size() < 2) return;  // degenerate draw
    const auto split = apply(s, SplitModule{"package", "pkg01", parts});
    EXPECT_EQ(split.scheme("plugin"), s.scheme("plugin"));
    const auto rows_before = module_metrics_table(s, "plugin");
    const auto rows_after = module_metrics_table(split, "plugin");
    ASSERT_EQ(rows_before.size(), rows_after.size());
    for (std::size_t i = 0; i < rows_before.size(); ++i) {
        EXPECT_EQ(rows_before[i].cohesion, rows_after[i].cohesion);
        EXPECT_EQ(rows_before[i].coupling, rows_after[i].coupling);
    }
}

TEST(Apply, MembershipOpsPreserveDescriptiveCounts) {
    const auto s = sample();
    const auto moved = apply(s, MergeModules{"package", {"pkg00", "pkg01"}, "pkgM"});
    const auto before = descriptive_stats(s);
    const auto after = descriptive_stats(moved);
    EXPECT_EQ(before.num_classes, after.num_classes);
    EXPECT_EQ(before.num_invocations, after.num_invocations);
}

TEST(Scenarios, MonolithSplitIncreasesModuleCount) {
    const auto pair = run_scenario("monolith-split", 2026);
    ASSERT_EQ(pair.size(), 2u);
    const auto v1_modules = pair[0].scheme("package").module_names();
    const auto v2_modules = pair[1].scheme("package").module_names();
    EXPECT_GT(v2_modules.size(), v1_modules.size());
    // the split successors exist and have computable cohesion
    const auto rows = module_metrics_table(pair[1], "package");
    int successors = 0;
    for (const auto& row : rows) {
        if (row.module.rfind("core.", 0) == 0) {
            ++successors;
            EXPECT_GE(row.cohesion, Ratio(0));
        }
    }
    EXPECT_EQ(successors, 3);
}

TEST(Scenarios, OrganicGrowthKeepsModuleSet) {
    const auto pair = run_scenario("organic-growth", 2026);
    ASSERT_EQ(pair.size(), 2u);
    EXPECT_EQ(pair[0].scheme("package").module_names(),
              pair[1].scheme("package").module_names());
    EXPECT_EQ(pair[0].scheme("plugin").module_names(),
              pair[1].scheme("plugin").module_names());
    EXPECT_GT(pair[1].classes.size(), pair[0].classes.size());
}

TEST(Scenarios, DeterministicAndNamed) {
    EXPECT_EQ(scenario_names(), (std::vector<std::string>{"monolith-split", "organic-growth"}));
    const auto a = run_scenario("monolith-split", 9);
    const auto b = run_scenario("monolith-split", 9);
    EXPECT_EQ(serialize_snapshot(a[0]), serialize_snapshot(b[0]));
    EXPECT_EQ(serialize_snapshot(a[1]), serialize_snapshot(b[1]));
    EXPECT_THROW(run_scenario("nope", 1), NotFoundError);
}
