#include <doctest.h>

#include "helpers.hpp"
#include "ik/canonical.hpp"
#include "ik/catalog.hpp"

using namespace ik;

TEST_CASE("canonical form is relabeling invariant") {
    std::mt19937_64 rng(0xC0FFEE);
    for (int t = 0; t < 500; ++t) {
        int n = 1 + static_cast<int>(rng() % 10);
        MultiGraph g = test::random_multigraph(rng, n, 0.4);
        MultiGraph h = test::relabel(rng, g);
        CHECK(canonical_form(g) == canonical_form(h));
    }
}

TEST_CASE("canonical equality agrees with brute-force isomorphism") {
    std::mt19937_64 rng(0xBEEF);
    std::vector<MultiGraph> pool;
    for (int t = 0; t < 60; ++t)
        pool.push_back(test::random_simple_graph(rng, 6 + static_cast<int>(rng() % 2), 0.5));
    for (size_t i = 0; i < pool.size(); ++i)
        for (size_t j = i + 1; j < pool.size(); ++j) {
            if (pool[i].order() != pool[j].order()) continue;
            bool brute = isomorphic_brute_force(pool[i], pool[j]);
            CHECK(isomorphic(pool[i], pool[j]) == brute);
        }
}

TEST_CASE("multigraphs with equal underlying structure but different multiplicities differ") {
    MultiGraph a = MultiGraph::build(3, {{0, 1, 1}, {1, 2, 1}});
    MultiGraph b = MultiGraph::build(3, {{0, 1, 2}, {1, 2, 1}});
    CHECK_FALSE(canonical_form(a) == canonical_form(b));
    CHECK(canonical_form(b) == canonical_form(MultiGraph::build(3, {{2, 1, 2}, {1, 0, 1}})));
}

TEST_CASE("labeling is a certificate: applying it reproduces the bytes") {
    std::mt19937_64 rng(0xFEED);
    for (int t = 0; t < 50; ++t) {
        MultiGraph g = test::random_multigraph(rng, 2 + static_cast<int>(rng() % 7), 0.5);
        CanonicalForm c = canonical_form(g);
        REQUIRE(static_cast<int>(c.labeling.size()) == g.order());
        // Relabel g by the inverse of the canonical labeling; forms must agree.
        std::vector<int> pos(g.order());
        for (int i = 0; i < g.order(); ++i) pos[c.labeling[i]] = i;
        std::vector<EdgeSpec> edges;
        for (const auto& e : g.edge_list()) edges.push_back({pos[e.u], pos[e.v], e.mult});
        CHECK(canonical_form(MultiGraph::build(g.order(), edges)).bytes == c.bytes);
    }
}

TEST_CASE("bipartite canonical form respects part swap") {
    // A path a-b-c viewed with either part labeled A gives the same form.
    MultiGraph p = MultiGraph::build(3, {{0, 1, 1}, {1, 2, 1}});
    BipartiteGraph one = BipartiteGraph::build(p, 0b101);
    BipartiteGraph other = BipartiteGraph::build(p, 0b010);
    CHECK(canonical_form(one) == canonical_form(other));
}

TEST_CASE("hex and hash are consistent with equality") {
    MultiGraph g = named("heawood").graph;
    std::mt19937_64 rng(7);
    MultiGraph h = test::relabel(rng, g);
    CHECK(canonical_form(g).hex() == canonical_form(h).hex());
    CHECK(canonical_form(g).hash() == canonical_form(h).hash());
}

TEST_CASE("non-isomorphic catalog graphs separate") {
    auto names = catalog_names();
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = i + 1; j < names.size(); ++j)
            CHECK_FALSE(canonical_form(named(names[i]).graph) ==
                        canonical_form(named(names[j]).graph));
}
