#include <doctest.h>

#include "helpers.hpp"
#include "ik/graph.hpp"

using namespace ik;

TEST_CASE("build validates its input") {
    CHECK_THROWS_AS(MultiGraph::build(3, {{0, 0, 1}}), GraphError);
    CHECK_THROWS_AS(MultiGraph::build(3, {{0, 3, 1}}), GraphError);
    CHECK_THROWS_AS(MultiGraph::build(3, {{-1, 2, 1}}), GraphError);
    CHECK_THROWS_AS(MultiGraph::build(3, {{0, 1, 1}, {1, 0, 1}}), GraphError);
    CHECK_THROWS_AS(MultiGraph::build(kMaxOrder + 1, {}), GraphError);
}

TEST_CASE("degrees and multiplicities") {
    MultiGraph g = MultiGraph::build(4, {{0, 1, 2}, {1, 2, 1}, {3, 2, 1}});
    CHECK(g.edge_count() == 4);
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(1) == 3);
    CHECK(g.simple_degree(1) == 2);
    CHECK(g.multiplicity(1, 0) == 2);
    CHECK(g.adjacent(2, 3));
    CHECK_FALSE(g.adjacent(0, 3));
    CHECK_FALSE(g.is_simple());
    CHECK(MultiGraph::build(2, {{0, 1, 1}}).is_simple());
}

TEST_CASE("edge_list round-trips") {
    MultiGraph g = MultiGraph::build(5, {{0, 4, 1}, {2, 1, 3}});
    MultiGraph h = MultiGraph::build(5, g.edge_list());
    CHECK(g == h);
}

TEST_CASE("bipartition puts the lowest vertex of each component in part A") {
    MultiGraph g = MultiGraph::build(5, {{0, 1, 1}, {1, 2, 1}, {3, 4, 1}});
    auto bp = bipartition(g);
    REQUIRE(bp.has_value());
    CHECK((bp->part_a >> 0 & 1) == 1);
    CHECK((bp->part_a >> 2 & 1) == 1);
    CHECK((bp->part_b >> 1 & 1) == 1);
    CHECK((bp->part_a >> 3 & 1) == 1);
    CHECK((bp->part_b >> 4 & 1) == 1);
}

TEST_CASE("odd cycles have no bipartition") {
    MultiGraph c5 = MultiGraph::build(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 0, 1}});
    CHECK_FALSE(bipartition(c5).has_value());
    CHECK_FALSE(BipartiteGraph::from_graph(c5).has_value());
}

TEST_CASE("BipartiteGraph::build rejects bad colorings and multigraphs") {
    MultiGraph path = MultiGraph::build(3, {{0, 1, 1}, {1, 2, 1}});
    CHECK_THROWS_AS(BipartiteGraph::build(path, 0b011), GraphError);
    CHECK_NOTHROW(BipartiteGraph::build(path, 0b101));
    MultiGraph bigon = MultiGraph::build(2, {{0, 1, 2}});
    CHECK_THROWS_AS(BipartiteGraph::build(bigon, 0b01), GraphError);
}

TEST_CASE("degree profiles") {
    // C6: all degree 3 is out of reach here, use a 3-regular bipartite graph.
    MultiGraph k33 = MultiGraph::build(
        6, {{0, 3, 1}, {0, 4, 1}, {0, 5, 1}, {1, 3, 1}, {1, 4, 1}, {1, 5, 1},
            {2, 3, 1}, {2, 4, 1}, {2, 5, 1}});
    auto bg = BipartiteGraph::from_graph(k33);
    REQUIRE(bg.has_value());
    auto [pa, pb] = degree_profile(*bg);
    CHECK(pa.count[3] == 3);
    CHECK(pb.count[3] == 3);
    CHECK(pa.to_string() == "[0,0,3]");

    MultiGraph star = MultiGraph::build(3, {{0, 1, 1}, {0, 2, 1}});
    auto sg = BipartiteGraph::from_graph(star);
    REQUIRE(sg.has_value());
    CHECK_THROWS_AS(degree_profile(*sg), GraphError);  // degree 2 unsupported
}

TEST_CASE("profile domination is lexicographic on high degrees") {
    DegreeProfile a, b;
    a.count[5] = 3, a.count[3] = 2;
    b.count[5] = 2, b.count[4] = 3;
    CHECK(a.dominates(b));
    CHECK_FALSE(b.dominates(a));
    b.count[6] = 1;
    CHECK(b.dominates(a));
}

TEST_CASE("distance and connectivity") {
    MultiGraph path = MultiGraph::build(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
    CHECK(distance(path, 0, 3) == 3);
    CHECK(distance(path, 1, 1) == 0);
    CHECK(is_connected(path));
    MultiGraph split = MultiGraph::build(4, {{0, 1, 1}, {2, 3, 1}});
    CHECK_FALSE(is_connected(split));
    CHECK_THROWS_AS(distance(split, 0, 3), GraphError);
    CHECK(is_connected(MultiGraph::build(0, {})));
}

TEST_CASE("girth") {
    CHECK(girth(MultiGraph::build(3, {{0, 1, 1}, {1, 2, 1}})) == 0);
    CHECK(girth(MultiGraph::build(2, {{0, 1, 2}})) == 2);
    MultiGraph c5 = MultiGraph::build(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 0, 1}});
    CHECK(girth(c5) == 5);
    MultiGraph k4 = MultiGraph::build(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1},
                                          {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
    CHECK(girth(k4) == 3);
}
