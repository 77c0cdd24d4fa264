#ifndef IK_TEST_HELPERS_HPP
#define IK_TEST_HELPERS_HPP

#include <numeric>
#include <random>
#include <vector>

#include "ik/graph.hpp"

namespace ik::test {

// Erdos-Renyi-style simple graph.
inline MultiGraph random_simple_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<EdgeSpec> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v, 1});
    return MultiGraph::build(n, edges);
}

// Random multigraph; multiplicities 1..3.
inline MultiGraph random_multigraph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::uniform_int_distribution<int> mult(1, 3);
    std::vector<EdgeSpec> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v, mult(rng)});
    return MultiGraph::build(n, edges);
}

// Random bipartite simple graph on parts of sizes na, nb.
inline MultiGraph random_bipartite_graph(std::mt19937_64& rng, int na, int nb, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<EdgeSpec> edges;
    for (int u = 0; u < na; ++u)
        for (int v = 0; v < nb; ++v)
            if (coin(rng)) edges.push_back({u, na + v, 1});
    return MultiGraph::build(na + nb, edges);
}

// The same graph under a uniformly random vertex relabeling.
inline MultiGraph relabel(std::mt19937_64& rng, const MultiGraph& g) {
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<EdgeSpec> edges;
    for (const auto& e : g.edge_list()) edges.push_back({perm[e.u], perm[e.v], e.mult});
    return MultiGraph::build(g.order(), edges);
}

}  // namespace ik::test

#endif
