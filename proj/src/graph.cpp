#include "ik/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>

namespace ik {

void MultiGraph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw GraphError("vertex " + std::to_string(v) + " out of range [0, " +
                         std::to_string(n_) + ")");
}

MultiGraph MultiGraph::build(int order, const std::vector<EdgeSpec>& edges) {
    if (order < 0 || order > kMaxOrder)
        throw GraphError("order " + std::to_string(order) + " out of range");
    MultiGraph g;
    g.n_ = order;
    g.mult_.assign(static_cast<size_t>(order) * order, 0);
    for (const auto& e : edges) {
        g.check_vertex(e.u);
        g.check_vertex(e.v);
        if (e.u == e.v)
            throw GraphError("loop edge at vertex " + std::to_string(e.u));
        if (e.mult <= 0 || e.mult > 255)
            throw GraphError("bad multiplicity " + std::to_string(e.mult));
        if (g.mult_[g.idx(e.u, e.v)] != 0)
            throw GraphError("duplicate edge entry (" + std::to_string(e.u) + "," +
                             std::to_string(e.v) + ")");
        g.mult_[g.idx(e.u, e.v)] = static_cast<std::uint8_t>(e.mult);
        g.mult_[g.idx(e.v, e.u)] = static_cast<std::uint8_t>(e.mult);
        g.adj_[e.u] |= 1u << e.v;
        g.adj_[e.v] |= 1u << e.u;
        g.degree_[e.u] += e.mult;
        g.degree_[e.v] += e.mult;
        g.edge_count_ += e.mult;
    }
    return g;
}

int MultiGraph::simple_degree(Vertex v) const {
    return std::popcount(adj_[v]);
}

std::vector<Vertex> MultiGraph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    std::uint32_t m = adj_[v];
    while (m) {
        int w = std::countr_zero(m);
        out.push_back(w);
        m &= m - 1;
    }
    return out;
}

bool MultiGraph::is_simple() const {
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (mult_[idx(u, v)] > 1) return false;
    return true;
}

std::vector<EdgeSpec> MultiGraph::edge_list() const {
    std::vector<EdgeSpec> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (int m = mult_[idx(u, v)]; m > 0) out.push_back({u, v, m});
    return out;
}

std::optional<Bipartition> bipartition(const MultiGraph& g) {
    const int n = g.order();
    std::vector<int> color(n, -1);
    Bipartition parts;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (Vertex v : g.neighbors(u)) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    q.push(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    for (int v = 0; v < n; ++v)
        (color[v] == 0 ? parts.part_a : parts.part_b) |= 1u << v;
    return parts;
}

BipartiteGraph BipartiteGraph::build(const MultiGraph& g, std::uint32_t part_a) {
    if (!g.is_simple()) throw GraphError("bipartite graph must be simple");
    const std::uint32_t all = g.order() == 32 ? ~0u : (1u << g.order()) - 1;
    if (part_a & ~all) throw GraphError("part mask exceeds vertex range");
    BipartiteGraph bg;
    bg.g_ = g;
    bg.part_a_ = part_a;
    bg.part_b_ = all & ~part_a;
    for (int v = 0; v < g.order(); ++v) {
        std::uint32_t same = bg.in_part_a(v) ? bg.part_a_ : bg.part_b_;
        if (g.neighbor_mask(v) & same)
            throw GraphError("edge inside one part at vertex " + std::to_string(v));
    }
    return bg;
}

std::optional<BipartiteGraph> BipartiteGraph::from_graph(const MultiGraph& g) {
    if (!g.is_simple()) return std::nullopt;
    auto parts = bipartition(g);
    if (!parts) return std::nullopt;
    return build(g, parts->part_a);
}

int DegreeProfile::vertices() const {
    int s = 0;
    for (int c : count) s += c;
    return s;
}

int DegreeProfile::degree_sum() const {
    int s = 0;
    for (int d = 0; d < 8; ++d) s += d * count[d];
    return s;
}

std::string DegreeProfile::to_string() const {
    std::string out = "[";
    int hi = (count[7] || count[6]) ? 7 : 5;
    for (int d = hi; d >= 3; --d) {
        out += std::to_string(count[d]);
        if (d > 3) out += ",";
    }
    return out + "]";
}

bool DegreeProfile::dominates(const DegreeProfile& o) const {
    for (int d = 7; d >= 3; --d)
        if (count[d] != o.count[d]) return count[d] > o.count[d];
    return true;  // equal
}

std::pair<DegreeProfile, DegreeProfile> degree_profile(const BipartiteGraph& g) {
    DegreeProfile pa, pb;
    for (int v = 0; v < g.graph().order(); ++v) {
        int d = g.graph().degree(v);
        if (d < 3 || d > 7)
            throw GraphError("vertex " + std::to_string(v) + " has degree " +
                             std::to_string(d) + ", outside supported range 3..7");
        (g.in_part_a(v) ? pa : pb).count[d] += 1;
    }
    if (!pa.dominates(pb)) std::swap(pa, pb);
    return {pa, pb};
}

int distance(const MultiGraph& g, Vertex u, Vertex v) {
    std::vector<int> dist(g.order(), -1);
    dist[u] = 0;
    std::queue<int> q;
    q.push(u);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        if (x == v) return dist[x];
        for (Vertex y : g.neighbors(x))
            if (dist[y] == -1) {
                dist[y] = dist[x] + 1;
                q.push(y);
            }
    }
    throw GraphError("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                     " are in different components");
}

bool is_connected(const MultiGraph& g) {
    if (g.order() == 0) return true;
    std::uint32_t seen = 1u;
    std::uint32_t frontier = 1u;
    while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        std::uint32_t fresh = g.neighbor_mask(v) & ~seen;
        seen |= fresh;
        frontier |= fresh;
    }
    const std::uint32_t all = g.order() == 32 ? ~0u : (1u << g.order()) - 1;
    return seen == all;
}

int girth(const MultiGraph& g) {
    int best = 0;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.multiplicity(u, v) >= 2) best = 2;
    // BFS from every vertex; a non-tree edge closing at depth d gives a cycle.
    for (int s = 0; s < g.order(); ++s) {
        std::vector<int> dist(g.order(), -1), parent(g.order(), -1);
        dist[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (Vertex v : g.neighbors(u)) {
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else if (v != parent[u]) {
                    int len = dist[u] + dist[v] + 1;
                    if (best == 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

}  // namespace ik
