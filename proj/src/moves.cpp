#include "ik/moves.hpp"

#include <algorithm>
#include <deque>

namespace ik {

namespace {

std::vector<EdgeSpec> with_unit_removed(const MultiGraph& g, Vertex u, Vertex v) {
    std::vector<EdgeSpec> edges;
    for (const auto& e : g.edge_list()) {
        if ((e.u == std::min(u, v)) && (e.v == std::max(u, v))) {
            if (e.mult > 1) edges.push_back({e.u, e.v, e.mult - 1});
        } else {
            edges.push_back(e);
        }
    }
    return edges;
}

MultiGraph drop_isolated(const MultiGraph& g) {
    std::vector<int> relabel(g.order(), -1);
    int next = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0) relabel[v] = next++;
    if (next == g.order()) return g;
    std::vector<EdgeSpec> edges;
    for (const auto& e : g.edge_list()) edges.push_back({relabel[e.u], relabel[e.v], e.mult});
    return MultiGraph::build(next, edges);
}

}  // namespace

MultiGraph nabla_y(const MultiGraph& g, Vertex a, Vertex b, Vertex c) {
    if (a == b || b == c || a == c || !g.adjacent(a, b) || !g.adjacent(b, c) ||
        !g.adjacent(a, c))
        throw GraphError("nabla_y: vertices do not span a triangle");
    if (g.order() + 1 > kMaxOrder) throw GraphError("nabla_y: graph too large");
    auto edges = with_unit_removed(g, a, b);
    MultiGraph tmp = MultiGraph::build(g.order(), edges);
    edges = with_unit_removed(tmp, b, c);
    tmp = MultiGraph::build(g.order(), edges);
    edges = with_unit_removed(tmp, a, c);
    const int v = g.order();
    edges.push_back({a, v, 1});
    edges.push_back({b, v, 1});
    edges.push_back({c, v, 1});
    return MultiGraph::build(g.order() + 1, edges);
}

YNablaResult y_nabla(const MultiGraph& g, Vertex v) {
    if (v < 0 || v >= g.order()) throw GraphError("y_nabla: vertex out of range");
    if (g.degree(v) != 3) throw GraphError("y_nabla: vertex degree is not 3");
    auto nbrs = g.neighbors(v);
    if (nbrs.size() != 3)
        throw GraphError("y_nabla: vertex has a repeated neighbor");
    for (Vertex u : nbrs)
        if (g.multiplicity(v, u) != 1)
            throw GraphError("y_nabla: parallel edge at the removed vertex");

    std::vector<int> relabel(g.order());
    int next = 0;
    for (int x = 0; x < g.order(); ++x) relabel[x] = (x == v) ? -1 : next++;

    YNablaResult out;
    std::vector<EdgeSpec> edges;
    for (const auto& e : g.edge_list())
        if (e.u != v && e.v != v) edges.push_back({relabel[e.u], relabel[e.v], e.mult});
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            if (g.adjacent(nbrs[i], nbrs[j]))
                out.simplified = true;  // the triangle edge already exists
            else
                edges.push_back({relabel[nbrs[i]], relabel[nbrs[j]], 1});
        }
    out.graph = MultiGraph::build(g.order() - 1, edges);
    return out;
}

namespace {

// All moves from one member: every triangle, and every eligible degree-3
// vertex whose neighbors are pairwise non-adjacent (a simplifying move would
// change the edge count and is only reported).
void expand_member(const MultiGraph& g, bool include_y_nabla,
                   std::vector<std::pair<MultiGraph, MoveKind>>& out,
                   bool& simplification_seen) {
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b) {
            if (!g.adjacent(a, b)) continue;
            for (int c = b + 1; c < g.order(); ++c)
                if (g.adjacent(a, c) && g.adjacent(b, c))
                    out.emplace_back(nabla_y(g, a, b, c), MoveKind::NablaY);
        }
    if (!include_y_nabla) return;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) != 3) continue;
        auto nbrs = g.neighbors(v);
        if (nbrs.size() != 3) continue;
        bool unit = true;
        for (Vertex u : nbrs) unit = unit && g.multiplicity(v, u) == 1;
        if (!unit) continue;
        YNablaResult r = y_nabla(g, v);
        if (r.simplified)
            simplification_seen = true;
        else
            out.emplace_back(std::move(r.graph), MoveKind::YNabla);
    }
}

}  // namespace

FamilyClosure family_closure(const MultiGraph& seed) {
    if (!is_connected(seed)) throw GraphError("family_closure: seed must be connected");
    FamilyClosure fc;
    fc.seed = canonical_form(seed);
    fc.members.emplace(fc.seed, seed);
    std::deque<CanonicalForm> frontier{fc.seed};
    while (!frontier.empty()) {
        CanonicalForm cur = std::move(frontier.front());
        frontier.pop_front();
        const MultiGraph g = fc.members.at(cur);
        std::vector<std::pair<MultiGraph, MoveKind>> next;
        expand_member(g, true, next, fc.simplification_seen);
        for (auto& [child, kind] : next) {
            CanonicalForm cf = canonical_form(child);
            fc.edges_between.emplace_back(cur, cf, kind);
            if (fc.members.emplace(cf, std::move(child)).second) frontier.push_back(cf);
        }
    }
    return fc;
}

std::set<CanonicalForm> nabla_descendants(const MultiGraph& seed) {
    std::map<CanonicalForm, MultiGraph> members;
    CanonicalForm root = canonical_form(seed);
    members.emplace(root, seed);
    std::deque<CanonicalForm> frontier{root};
    bool unused = false;
    while (!frontier.empty()) {
        CanonicalForm cur = std::move(frontier.front());
        frontier.pop_front();
        const MultiGraph g = members.at(cur);
        std::vector<std::pair<MultiGraph, MoveKind>> next;
        expand_member(g, false, next, unused);
        for (auto& [child, kind] : next) {
            CanonicalForm cf = canonical_form(child);
            if (members.emplace(cf, std::move(child)).second) frontier.push_back(cf);
        }
    }
    std::set<CanonicalForm> out;
    for (auto& [cf, g] : members) out.insert(cf);
    return out;
}

std::vector<MultiGraph> vertex_splits(const MultiGraph& g, Vertex v) {
    auto nbrs = g.neighbors(v);
    if (nbrs.size() < 2) throw GraphError("vertex_splits: need at least two neighbors");
    if (g.order() + 1 > kMaxOrder) throw GraphError("vertex_splits: graph too large");
    std::vector<MultiGraph> out;
    const int d = static_cast<int>(nbrs.size());
    const int copy = g.order();
    // First neighbor stays with v, which kills the block swap.
    for (int pick = 0; pick < (1 << (d - 1)); ++pick) {
        std::uint32_t to_copy = 0;
        for (int i = 1; i < d; ++i)
            if (pick >> (i - 1) & 1) to_copy |= 1u << nbrs[i];
        if (to_copy == 0) continue;  // both blocks must be nonempty
        std::vector<EdgeSpec> edges;
        for (const auto& e : g.edge_list()) {
            if (e.u != v && e.v != v) {
                edges.push_back(e);
                continue;
            }
            Vertex other = e.u == v ? e.v : e.u;
            if (to_copy >> other & 1u)
                edges.push_back({other, copy, e.mult});
            else
                edges.push_back(e);
        }
        edges.push_back({v, copy, 1});
        out.push_back(MultiGraph::build(g.order() + 1, edges));
    }
    return out;
}

std::vector<MultiGraph> one_step_minors(const MultiGraph& g) {
    std::set<CanonicalForm> seen;
    std::vector<MultiGraph> out;
    auto add = [&](const MultiGraph& m) {
        if (seen.insert(canonical_form(m)).second) out.push_back(m);
    };
    for (const auto& e : g.edge_list()) {
        add(drop_isolated(MultiGraph::build(g.order(), with_unit_removed(g, e.u, e.v))));
        // Contract: merge e.v into e.u; all parallel e.u-e.v units become loops.
        std::vector<int> relabel(g.order());
        int next = 0;
        for (int x = 0; x < g.order(); ++x) relabel[x] = (x == e.v) ? -1 : next++;
        relabel[e.v] = relabel[e.u];
        std::vector<std::vector<int>> mult(g.order() - 1, std::vector<int>(g.order() - 1, 0));
        for (const auto& f : g.edge_list()) {
            int a = relabel[f.u], b = relabel[f.v];
            if (a == b) continue;
            mult[a][b] += f.mult;
        }
        std::vector<EdgeSpec> edges;
        for (int a = 0; a < g.order() - 1; ++a)
            for (int b = 0; b < g.order() - 1; ++b)
                if (int m = mult[a][b] + mult[b][a]; m > 0 && a < b)
                    edges.push_back({a, b, m});
        add(drop_isolated(MultiGraph::build(g.order() - 1, edges)));
    }
    return out;
}

}  // namespace ik
