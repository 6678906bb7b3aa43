#include "modquality/evolution.hpp"

#include <gtest/gtest.h>

#include "modquality/synth.hpp"
#include "test_util.hpp"

using namespace modquality;
using testutil::make_snapshot;

namespace {

std::string data_path(const std::string& name) { return std::string(DATA_DIR) + "/" + name; }

}  // namespace

TEST(MatchModules, SetAlgebra) {
    const auto from = make_snapshot(
        "1", {{"a", {{"p", "P"}}}, {"b", {{"p", "Q"}}}}, {});
    const auto to = make_snapshot(
        "2", {{"a", {{"p", "Q"}}}, {"b", {{"p", "R"}}}}, {});
    const auto match = match_modules({from, to}, "p");
    EXPECT_EQ(match.matched, std::vector<std::string>{"Q"});
    EXPECT_EQ(match.removed, std::vector<std::string>{"P"});
    EXPECT_EQ(match.created, std::vector<std::string>{"R"});
}

TEST(MatchModules, IdenticalSetsAllMatch) {
    const auto s = make_snapshot("1", {{"a", {{"p", "P"}}}, {"b", {{"p", "Q"}}}}, {});
    const auto match = match_modules({s, s}, "p");
    EXPECT_EQ(match.matched, (std::vector<std::string>{"P", "Q"}));
    EXPECT_TRUE(match.created.empty());
    EXPECT_TRUE(match.removed.empty());
}

TEST(MatchModules, DisjointSetsNoMatch) {
    const auto from = make_snapshot("1", {{"a", {{"p", "P"}}}}, {});
    const auto to = make_snapshot("2", {{"a", {{"p", "Z"}}}}, {});
    const auto match = match_modules({from, to}, "p");
    EXPECT_TRUE(match.matched.empty());
    EXPECT_EQ(match.created, std::vector<std::string>{"Z"});
    EXPECT_EQ(match.removed, std::vector<std::string>{"P"});
}

TEST(MatchModules, MissingSchemeThrows) {
    const auto from = make_snapshot("1", {{"a", {{"p", "P"}}}}, {});
    const auto to = make_snapshot("2", {{"a", {{"q", "P"}}}}, {});
    EXPECT_THROW(match_modules({from, to}, "q"), NotFoundError);
    EXPECT_THROW(match_modules({from, to}, "p"), NotFoundError);
}

TEST(ClassifyDelta, IntegerMetricIncrease) {
    // Ce of module P goes 1 -> 2
    const auto from = make_snapshot(
        "1",
        {{"a", {{"p", "P"}}}, {"x", {{"p", "X"}}}, {"y", {{"p", "Y"}}}},
        {{"a", "x", 1}});
    const auto to = make_snapshot(
        "2",
        {{"a", {{"p", "P"}}}, {"x", {{"p", "X"}}}, {"y", {{"p", "Y"}}}},
        {{"a", "x", 1}, {"a", "y", 1}});
    const auto table = classify_delta({from, to}, "p", MetricKind::Ce);
    EXPECT_EQ(table.increased, 1);  // P
    EXPECT_EQ(table.same, 2);       // X and Y keep Ce = 0
    EXPECT_EQ(table.decreased, 0);
}

TEST(ClassifyDelta, TinyPairHandComputed) {
    const auto v1 = load_snapshot_file(data_path("tiny-v1.facts"));
    const auto v2 = load_snapshot_file(data_path("tiny-v2.facts"));
    const VersionPair pair{v1, v2};
    EXPECT_EQ(pair.label(), "1.0->2.0");

    const auto cohesion = classify_delta(pair, "package", MetricKind::Cohesion);
    EXPECT_EQ(cohesion.increased, 1);  // C: 0 -> 1/4
    EXPECT_EQ(cohesion.same, 2);       // A, B unchanged at 1/4
    EXPECT_EQ(cohesion.decreased, 0);

    const auto coupling = classify_delta(pair, "package", MetricKind::Coupling);
    EXPECT_EQ(coupling.increased, 1);  // A: 1/8 -> 1/4
    EXPECT_EQ(coupling.same, 1);       // C stays 1/4
    EXPECT_EQ(coupling.decreased, 1);  // B: 3/8 -> 1/4

    const auto ca = classify_delta(pair, "package", MetricKind::Ca);
    EXPECT_EQ(ca.increased, 1);
    EXPECT_EQ(ca.same, 2);
    const auto ce = classify_delta(pair, "package", MetricKind::Ce);
    EXPECT_EQ(ce.increased, 1);
    EXPECT_EQ(ce.same, 2);

    EXPECT_TRUE(cohesion.created.empty());
    EXPECT_TRUE(cohesion.removed.empty());
}

TEST(ClassifyDelta, CreatedAndRemovedListedSeparately) {
    const auto v2 = load_snapshot_file(data_path("tiny-v2.facts"));
    const auto v3 = load_snapshot_file(data_path("tiny-v3.facts"));
    const auto table = classify_delta({v2, v3}, "package", MetricKind::Cohesion);
    EXPECT_EQ(table.created, std::vector<std::string>{"D"});
    EXPECT_TRUE(table.removed.empty());
    EXPECT_EQ(table.increased + table.same + table.decreased, 3);  // A, B, C matched
}

TEST(ClassifyDelta, ReversalOnTinyPair) {
    const auto v1 = load_snapshot_file(data_path("tiny-v1.facts"));
    const auto v2 = load_snapshot_file(data_path("tiny-v2.facts"));
    for (MetricKind metric : {MetricKind::Cohesion, MetricKind::Coupling, MetricKind::Ca,
                              MetricKind::Ce}) {
        const auto forward = classify_delta({v1, v2}, "package", metric);
        const auto backward = classify_delta({v2, v1}, "package", metric);
        EXPECT_EQ(forward.increased, backward.decreased);
        EXPECT_EQ(forward.decreased, backward.increased);
        EXPECT_EQ(forward.same, backward.same);
        EXPECT_EQ(forward.created, backward.removed);
        EXPECT_EQ(forward.removed, backward.created);
    }
}

TEST(ClassifyDelta, SelfComparisonAllSame) {
    const auto v2 = load_snapshot_file(data_path("tiny-v2.facts"));
    for (const auto& scheme : {"package", "plugin"}) {
        const auto table = classify_delta({v2, v2}, scheme, MetricKind::Coupling);
        EXPECT_EQ(table.increased, 0);
        EXPECT_EQ(table.decreased, 0);
        EXPECT_EQ(table.same,
                  static_cast<int>(v2.scheme(scheme).module_names().size()));
    }
}

TEST(ClassifyDelta, UnknownMetricNameThrows) {
    EXPECT_THROW(parse_metric("entropy"), InvalidArgumentError);
    EXPECT_EQ(parse_metric("ce"), MetricKind::Ce);
    EXPECT_EQ(metric_name(MetricKind::Ca), "ca");
}

TEST(EvolutionProperties, AntisymmetryOnGeneratedPairs) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto snapshots = run_scenario("organic-growth", seed);
        const VersionPair forward{snapshots[0], snapshots[1]};
        const VersionPair backward{snapshots[1], snapshots[0]};
        for (MetricKind metric : {MetricKind::Cohesion, MetricKind::Coupling, MetricKind::Ca,
                                  MetricKind::Ce}) {
            for (const auto& scheme : {"package", "plugin"}) {
                const auto f = classify_delta(forward, scheme, metric);
                const auto b = classify_delta(backward, scheme, metric);
                EXPECT_EQ(f.increased, b.decreased);
                EXPECT_EQ(f.decreased, b.increased);
                EXPECT_EQ(f.same, b.same);
            }
        }
    }
}

TEST(EvolutionProperties, PartitionInvariant) {
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        const auto pair = run_scenario("monolith-split", seed);
        const VersionPair p{pair[0], pair[1]};
        const auto match = match_modules(p, "package");
        const auto from_count = pair[0].scheme("package").module_names().size();
        const auto to_count = pair[1].scheme("package").module_names().size();
        EXPECT_EQ(match.matched.size() + match.removed.size(), from_count);
        EXPECT_EQ(match.matched.size() + match.created.size(), to_count);
        const auto table = classify_delta(p, "package", MetricKind::Cohesion);
        EXPECT_EQ(table.increased + table.same + table.decreased,
                  static_cast<int>(match.matched.size()));
    }
}

TEST(SccSeries, SingleAcyclicSnapshot) {
    const auto v1 = load_snapshot_file(data_path("tiny-v1.facts"));
    const auto rows = scc_series(std::span(&v1, 1), "package");
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].version_label, "1.0");
    EXPECT_EQ(rows[0].num_scc, 0);
    EXPECT_EQ(rows[0].largest_scc, 0);
}

TEST(SccSeries, GrowingCycleAcrossTinySeries) {
    const std::vector<SystemSnapshot> series{
        load_snapshot_file(data_path("tiny-v1.facts")),
        load_snapshot_file(data_path("tiny-v2.facts")),
        load_snapshot_file(data_path("tiny-v3.facts"))};
    const auto rows = scc_series(series, "package");
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0].num_scc, 0);
    EXPECT_EQ(rows[0].largest_scc, 0);
    EXPECT_EQ(rows[1].num_scc, 1);
    EXPECT_EQ(rows[1].largest_scc, 3);  // A -> B -> C -> A
    EXPECT_EQ(rows[2].num_scc, 1);
    EXPECT_EQ(rows[2].largest_scc, 4);  // D joins the cycle

    const auto plugin_rows = scc_series(series, "plugin");
    EXPECT_EQ(plugin_rows[0].largest_scc, 0);
    EXPECT_EQ(plugin_rows[1].largest_scc, 2);  // main <-> ext
    EXPECT_EQ(plugin_rows[2].largest_scc, 2);
}

TEST(SccSeries, EmptyInputThrows) {
    EXPECT_THROW(scc_series({}, "package"), InvalidArgumentError);
}
