#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphk/ktheory.hpp"
#include "graphk/moves.hpp"
#include "graphk/text.hpp"

using namespace graphk;

TEST_CASE("partition literals") {
    Graph e = fixture("graph_e");
    OutPartition p = parse_partition(e, "v = {v: 2} | {w: 2}");
    CHECK(p.vertex == e.index_of("v"));
    REQUIRE(p.parts.size() == 2);
    CHECK(p.parts[0] == std::map<std::size_t, ExtNat>{{0, ExtNat(2)}});
    CHECK(p.parts[1] == std::map<std::size_t, ExtNat>{{1, ExtNat(2)}});

    OutPartition q = parse_partition(e, "w = {v: inf, w: 2} | {w: inf}");
    CHECK(q.parts[0].at(0).is_omega());
    CHECK(q.parts[0].at(1).finite() == 2);
    CHECK(q.parts[1].at(1).is_omega());

    CHECK_THROWS_AS(parse_partition(e, "v {v: 2}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition(e, "z = {v: 2}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition(e, "v = {v: x}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition(e, "v = {v: 1, v: 1}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition(e, "v = {v: 2} extra"), std::invalid_argument);
}

TEST_CASE("partition validation") {
    Graph e = fixture("graph_e");
    auto reject = [&](const Graph& g, const OutPartition& p, const char* why) {
        INFO(why);
        CHECK_THROWS_AS(validate_partition(g, p), std::invalid_argument);
    };

    Graph with_sink = parse_graph("vertex a\nedge b b 1\n");
    reject(with_sink, OutPartition{0, {{{1, ExtNat(1)}}}}, "sink");

    Graph f = fixture("graph_f");
    reject(f, parse_partition(f, "s1 = {v: 1}"), "non-target");
    reject(e, OutPartition{0, {{}, {{0, ExtNat(2)}, {1, ExtNat(2)}}}}, "empty group");
    reject(e, OutPartition{0, {{{0, ExtNat(0)}}, {{0, ExtNat(2)}, {1, ExtNat(2)}}}},
           "all-zero group");
    reject(e, parse_partition(e, "w = {v: inf, w: inf} | {v: inf}"), "omega twice");
    reject(e, parse_partition(e, "w = {v: inf, w: 1} | {v: 1}"), "omega unassigned");
    reject(e, parse_partition(e, "v = {v: 1, w: 2} | {v: 2}"), "finite sum mismatch");
    reject(e, parse_partition(e, "v = {v: inf} | {w: 2}"), "omega share of finite");
    reject(e, OutPartition{7, {{{0, ExtNat(1)}}}}, "vertex out of range");
    reject(e, OutPartition{0, {}}, "no groups");

    validate_partition(e, parse_partition(e, "v = {v: 2} | {w: 2}"));
    validate_partition(e, parse_partition(e, "w = {v: inf, w: 2} | {w: inf}"));
}

TEST_CASE("outsplit rebuilds the expected graph") {
    Graph e = fixture("graph_e");
    Graph split = outsplit(e, parse_partition(e, "v = {v: 2} | {w: 2}"));
    Graph expected = parse_graph(
        "vertex v#1\nvertex v#2\nvertex w\n"
        "edge v#1 v#1 2\nedge v#1 v#2 2\n"
        "edge v#2 w 2\n"
        "edge w v#1 inf\nedge w v#2 inf\nedge w w inf\n");
    CHECK(split == expected);
    CHECK(parse_graph(serialize_graph(split)) == split);

    K0Data before = k0_of_graph(e), after = k0_of_graph(split);
    CHECK(after.invariant_factors == before.invariant_factors);
    CHECK(after.free_rank == before.free_rank);
    CHECK(after.k1_rank == before.k1_rank);
}

TEST_CASE("outsplitting the infinite loop vertex reproduces the two-vertex graph") {
    Graph ei = fixture("e_infinity");
    Graph split = outsplit(ei, parse_partition(ei, "c = {c: 2} | {c: inf}"));
    Graph expected = parse_graph(
        "vertex c#1\nvertex c#2\n"
        "edge c#1 c#1 2\nedge c#1 c#2 2\n"
        "edge c#2 c#1 inf\nedge c#2 c#2 inf\n");
    CHECK(split == expected);
    CHECK(isomorphic(split, fixture("graph_e")));

    K0Data before = k0_of_graph(ei), after = k0_of_graph(split);
    CHECK(after.invariant_factors == before.invariant_factors);
    CHECK(after.free_rank == before.free_rank);
    CHECK(after.k1_rank == before.k1_rank);
}

TEST_CASE("source addition") {
    Graph e = fixture("graph_e");
    Graph grown = add_sources(e, e.index_of("w"), 2);
    Graph expected = parse_graph(
        "vertex v\nvertex w\nvertex w#1\nvertex w#2\n"
        "edge v v 2\nedge v w 2\n"
        "edge w w inf\nedge w v inf\n"
        "edge w#1 w 1\nedge w#2 w 1\n");
    CHECK(grown == expected);
    CHECK(isomorphic(grown, fixture("graph_f")));
    CHECK(k0_of_graph(grown) == k0_of_graph(fixture("graph_f")));

    CHECK_THROWS_AS(add_sources(e, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(add_sources(e, 9, 1), std::invalid_argument);
}

TEST_CASE("fresh names skip occupied slots") {
    Graph g = parse_graph("vertex v\nvertex v#1\nedge v v 1\nedge v#1 v 1\n");
    Graph grown = add_sources(g, 0, 1);
    CHECK(grown.vertex_count() == 3);
    CHECK(grown.find("v#2").has_value());
    CHECK(grown.mult(grown.index_of("v#2"), 0).finite() == 1);

    std::size_t counter = 0;
    CHECK(fresh_name(g, "v", counter) == "v#2");
    CHECK(fresh_name(g, "w", counter) == "w#3");  // counter keeps advancing
}

TEST_CASE("fan approximation folds source additions") {
    Graph e = fixture("graph_e");
    CHECK(attach_fan_approx(e, 0) == e);
    Graph fan = attach_fan_approx(e, 1);
    Graph fold = add_sources(add_sources(e, 0, 1), 1, 1);
    CHECK(fan == fold);
    CHECK(fan.vertex_count() == 4);
    CHECK(fan.mult(fan.index_of("v#1"), 0).finite() == 1);
    CHECK(fan.mult(fan.index_of("w#1"), 1).finite() == 1);

    Graph fan2 = attach_fan_approx(e, 2);
    CHECK(fan2.vertex_count() == 6);
    K0Data a = k0_of_graph(e), b = k0_of_graph(fan2);
    CHECK(a.invariant_factors == b.invariant_factors);
    CHECK(a.free_rank == b.free_rank);
    CHECK(a.k1_rank == b.k1_rank);
}
