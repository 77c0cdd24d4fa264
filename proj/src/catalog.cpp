#include "ik/catalog.hpp"

#include <algorithm>

namespace ik {

namespace {

MultiGraph complete_multipartite(const std::vector<int>& part_sizes) {
    std::vector<int> part_of;
    for (size_t p = 0; p < part_sizes.size(); ++p)
        for (int i = 0; i < part_sizes[p]; ++i) part_of.push_back(static_cast<int>(p));
    int n = static_cast<int>(part_of.size());
    std::vector<EdgeSpec> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) edges.push_back({u, v, 1});
    return MultiGraph::build(n, edges);
}

MultiGraph complete_graph(int n) {
    return complete_multipartite(std::vector<int>(n, 1));
}

// 14-vertex cubic bipartite graph of girth 6, in the usual circulant
// labeling: a 14-cycle plus the chords i -- i+5 for even i. Parts are the
// even and odd vertices.
MultiGraph heawood() {
    std::vector<EdgeSpec> e;
    for (int i = 0; i < 14; ++i) e.push_back({i, (i + 1) % 14, 1});
    for (int i = 0; i < 14; i += 2) e.push_back({i, (i + 5) % 14, 1});
    return MultiGraph::build(14, e);
}

// The unique connected bipartite graph with degree profile ([3,1,1],[3,1,1]):
// three vertices of each part joined to all of the other part, plus one edge
// pairing up the two leftover degree-3 vertices.
MultiGraph cousin110() {
    std::vector<EdgeSpec> e;
    for (int a : {0, 1, 2})
        for (int b = 5; b < 10; ++b) e.push_back({a, b, 1});
    for (int b : {5, 6, 7})
        for (int a : {3, 4}) e.push_back({a, b, 1});
    e.push_back({3, 8, 1});
    return MultiGraph::build(10, e);
}

// Heawood plus a chord between a distance-3 pair. All such chords give
// isomorphic graphs (checked in tests); we fix the lexicographically first pair.
MultiGraph cousin89() {
    MultiGraph h = heawood();
    for (int u = 0; u < h.order(); ++u)
        for (int v = u + 1; v < h.order(); ++v) {
            if (h.adjacent(u, v)) continue;
            if (distance(h, u, v) != 3) continue;
            auto e = h.edge_list();
            e.push_back({u, v, 1});
            return MultiGraph::build(h.order(), e);
        }
    throw GraphError("no distance-3 pair in Heawood");  // unreachable
}

// K_{3,3} with one side vertex d4 rejoined to the opposite side through three
// subdivision vertices: parts {d1,d2,d3,d4} = {0,1,2,3} and {4,5} plus the
// degree-2 vertices {6,7,8}.
MultiGraph k33_tilde() {
    std::vector<EdgeSpec> e = {
        {4, 0, 1}, {4, 1, 1}, {4, 2, 1},
        {5, 0, 1}, {5, 1, 1}, {5, 2, 1},
        {3, 6, 1}, {6, 0, 1},
        {3, 7, 1}, {7, 1, 1},
        {3, 8, 1}, {8, 2, 1},
    };
    return MultiGraph::build(9, e);
}

// k33_tilde plus one more degree-2 vertex joining d1 and d2.
MultiGraph p10_tilde() {
    auto e = k33_tilde().edge_list();
    e.push_back({9, 0, 1});
    e.push_back({9, 1, 1});
    return MultiGraph::build(10, e);
}

// K_{3,3} plus one edge inside a part.
MultiGraph k33_plus_e() {
    auto e = complete_multipartite({3, 3}).edge_list();
    e.push_back({0, 1, 1});
    return MultiGraph::build(6, e);
}

void assert_counts(const CatalogEntry& entry, int order, int edges) {
    if (entry.graph.order() != order || entry.graph.edge_count() != edges)
        throw GraphError("catalog entry " + entry.name + " failed its count check");
}

}  // namespace

std::vector<std::string> catalog_names() {
    return {"k7",       "k33",      "k33e",     "k3311",   "heawood",
            "cousin89", "cousin110", "k33tilde", "p10tilde"};
}

CatalogEntry named(const std::string& name) {
    CatalogEntry entry;
    entry.name = name;
    int order = 0, edges = 0;
    if (name == "k7") {
        entry.graph = complete_graph(7);
        entry.provenance = "complete graph on 7 vertices";
        order = 7, edges = 21;
    } else if (name == "k33") {
        entry.graph = complete_multipartite({3, 3});
        entry.provenance = "complete bipartite graph K_{3,3}";
        order = 6, edges = 9;
    } else if (name == "k33e") {
        entry.graph = k33_plus_e();
        entry.provenance = "K_{3,3} plus an edge inside one part";
        order = 6, edges = 10;
    } else if (name == "k3311") {
        entry.graph = complete_multipartite({3, 3, 1, 1});
        entry.provenance = "complete multipartite graph K_{3,3,1,1}";
        order = 8, edges = 22;
    } else if (name == "heawood") {
        entry.graph = heawood();
        entry.provenance = "cubic bipartite graph of girth 6 on 14 vertices";
        order = 14, edges = 21;
    } else if (name == "cousin89") {
        entry.graph = cousin89();
        entry.provenance = "Heawood plus a chord between a distance-3 pair";
        order = 14, edges = 22;
    } else if (name == "cousin110") {
        entry.graph = cousin110();
        entry.provenance = "unique connected bipartite graph with profile ([3,1,1],[3,1,1])";
        order = 10, edges = 22;
    } else if (name == "k33tilde") {
        entry.graph = k33_tilde();
        entry.provenance = "K_{3,3} with one vertex attached through three subdivision vertices";
        order = 9, edges = 12;
    } else if (name == "p10tilde") {
        entry.graph = p10_tilde();
        entry.provenance = "k33tilde plus a degree-2 vertex joining its two hub vertices";
        order = 10, edges = 14;
    } else {
        throw GraphError("unknown catalog name: " + name);
    }
    assert_counts(entry, order, edges);
    return entry;
}

std::string graph6_encode(const MultiGraph& g) {
    if (!g.is_simple()) throw GraphError("graph6 requires a simple graph");
    const int n = g.order();
    if (n > 62) throw GraphError("graph6 short form supports order <= 62");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int bit = 0, acc = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++bit == 6) {
                out.push_back(static_cast<char>(63 + acc));
                bit = 0;
                acc = 0;
            }
        }
    if (bit > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bit))));
    return out;
}

MultiGraph graph6_decode(const std::string& s) {
    if (s.empty()) throw GraphError("empty graph6 string");
    int n = static_cast<int>(static_cast<unsigned char>(s[0])) - 63;
    if (n < 0 || n > 62) throw GraphError("graph6: bad order byte");
    if (n > kMaxOrder) throw GraphError("graph6: order above supported maximum");
    const int bits = n * (n - 1) / 2;
    const int need = (bits + 5) / 6;
    if (static_cast<int>(s.size()) != 1 + need)
        throw GraphError("graph6: wrong length for order " + std::to_string(n));
    std::vector<EdgeSpec> edges;
    int bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit) {
            int c = static_cast<unsigned char>(s[1 + bit / 6]) - 63;
            if (c < 0 || c > 63) throw GraphError("graph6: byte out of range");
            if (c >> (5 - bit % 6) & 1) edges.push_back({u, v, 1});
        }
    // Padding bits must be zero.
    for (int b = bits; b < need * 6; ++b) {
        int c = static_cast<unsigned char>(s[1 + b / 6]) - 63;
        if (c >> (5 - b % 6) & 1) throw GraphError("graph6: nonzero padding");
    }
    return MultiGraph::build(n, edges);
}

}  // namespace ik
