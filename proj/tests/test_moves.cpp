#include <doctest.h>

#include "helpers.hpp"
#include "ik/canonical.hpp"
#include "ik/catalog.hpp"
#include "ik/moves.hpp"

using namespace ik;

TEST_CASE("nabla_y and y_nabla invert each other") {
    MultiGraph k4 = MultiGraph::build(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1},
                                          {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
    MultiGraph after = nabla_y(k4, 0, 1, 2);
    CHECK(after.order() == 5);
    CHECK(after.edge_count() == 6);
    CHECK(after.degree(4) == 3);
    CHECK_FALSE(after.adjacent(0, 1));
    YNablaResult back = y_nabla(after, 4);
    CHECK_FALSE(back.simplified);
    CHECK(isomorphic(back.graph, k4));
}

TEST_CASE("nabla_y requires a triangle") {
    MultiGraph path = MultiGraph::build(3, {{0, 1, 1}, {1, 2, 1}});
    CHECK_THROWS_AS(nabla_y(path, 0, 1, 2), GraphError);
}

TEST_CASE("y_nabla flags simplification when neighbors are pre-joined") {
    // Vertex 3 has neighbors 0,1,2 and 0-1 is already an edge.
    MultiGraph g = MultiGraph::build(4, {{3, 0, 1}, {3, 1, 1}, {3, 2, 1}, {0, 1, 1}});
    YNablaResult r = y_nabla(g, 3);
    CHECK(r.simplified);
    MultiGraph h = MultiGraph::build(4, {{3, 0, 1}, {3, 1, 1}, {3, 2, 1}});
    CHECK_FALSE(y_nabla(h, 3).simplified);
}

TEST_CASE("y_nabla requires a genuine degree-3 vertex") {
    MultiGraph bigon = MultiGraph::build(3, {{0, 1, 2}, {0, 2, 1}});
    CHECK_THROWS_AS(y_nabla(bigon, 0), GraphError);
}

TEST_CASE("family closures have the expected sizes") {
    FamilyClosure k7 = family_closure(named("k7").graph);
    CHECK(k7.members.size() == 20);
    CHECK_FALSE(k7.simplification_seen);
    CHECK(k7.members.count(canonical_form(named("heawood").graph)) == 1);

    CHECK(family_closure(named("k3311").graph).members.size() == 58);
    CHECK(family_closure(named("cousin110").graph).members.size() == 110);
}

TEST_CASE("closure is seed independent within a family") {
    FamilyClosure from_c110 = family_closure(named("cousin110").graph);
    FamilyClosure from_c89 = family_closure(named("cousin89").graph);
    CHECK(from_c110.members.size() == from_c89.members.size());
    for (const auto& [canon, g] : from_c110.members)
        CHECK(from_c89.members.count(canon) == 1);
}

TEST_CASE("nabla descendants of k7 are the 14 KS graphs") {
    auto ks = nabla_descendants(named("k7").graph);
    CHECK(ks.size() == 14);
    CHECK(ks.count(canonical_form(named("k7").graph)) == 1);
    CHECK(ks.count(canonical_form(named("heawood").graph)) == 1);
}

TEST_CASE("every family member preserves the edge count") {
    for (const auto& [canon, g] : family_closure(named("k7").graph).members)
        CHECK(g.edge_count() == 21);
    for (const auto& [canon, g] : family_closure(named("cousin110").graph).members)
        CHECK(g.edge_count() == 22);
}

TEST_CASE("vertex split counts and shape") {
    // Splitting a degree-d vertex gives 2^(d-1) - 1 splits (nonempty sides,
    // up to swapping the two copies).
    MultiGraph star5 = MultiGraph::build(
        6, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}, {0, 5, 1}});
    auto splits = vertex_splits(star5, 0);
    CHECK(splits.size() == 15);
    for (const auto& s : splits) {
        CHECK(s.order() == 7);
        CHECK(s.edge_count() == 6);
        CHECK(s.adjacent(0, 6));
        CHECK(s.degree(0) + s.degree(6) == 7);
        CHECK(s.degree(0) >= 2);
        CHECK(s.degree(6) >= 2);
    }
}

TEST_CASE("contracting the split edge restores the original graph") {
    std::mt19937_64 rng(0x517);
    MultiGraph g = named("k33").graph;
    for (const auto& s : vertex_splits(g, 2)) {
        // Contract the edge between vertex 2 and the new vertex.
        bool found = false;
        for (const auto& m : one_step_minors(s))
            if (isomorphic(m, g)) found = true;
        CHECK(found);
    }
    (void)rng;
}

TEST_CASE("one_step_minors covers deletions and contractions without duplicates") {
    MultiGraph tri = MultiGraph::build(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
    auto minors = one_step_minors(tri);
    // Deleting any edge gives a path; contracting gives a bigon:
    // two isomorphism classes.
    CHECK(minors.size() == 2);
    bool saw_path = false, saw_bigon = false;
    for (const auto& m : minors) {
        if (m.edge_count() == 2 && m.order() == 3) saw_path = true;
        if (m.edge_count() == 2 && m.order() == 2) saw_bigon = true;
    }
    CHECK(saw_path);
    CHECK(saw_bigon);
}
