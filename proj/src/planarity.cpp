#include "ik/planarity.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <unordered_set>

#include "ik/canonical.hpp"

namespace ik {

namespace {

MultiGraph underlying_simple(const MultiGraph& g) {
    std::vector<EdgeSpec> edges;
    for (const auto& e : g.edge_list()) edges.push_back({e.u, e.v, 1});
    return MultiGraph::build(g.order(), edges);
}

// --- biconnected components (Tarjan, iterative via recursion on <=32 vertices) ---

struct BccState {
    const MultiGraph& g;
    std::vector<int> disc, low;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<std::pair<int, int>>> components;
    int timer = 0;

    explicit BccState(const MultiGraph& gr)
        : g(gr), disc(gr.order(), -1), low(gr.order(), 0) {}

    void dfs(int u, int parent) {
        disc[u] = low[u] = timer++;
        for (Vertex v : g.neighbors(u)) {
            if (v == parent) continue;
            if (disc[v] == -1) {
                edge_stack.push_back({u, v});
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    std::vector<std::pair<int, int>> comp;
                    for (;;) {
                        auto e = edge_stack.back();
                        edge_stack.pop_back();
                        comp.push_back(e);
                        if (e == std::make_pair(u, v)) break;
                    }
                    components.push_back(std::move(comp));
                }
            } else if (disc[v] < disc[u]) {
                edge_stack.push_back({u, v});
                low[u] = std::min(low[u], disc[v]);
            }
        }
    }
};

// --- face-embedding planarity on one biconnected component ---

struct Fragment {
    std::vector<int> contacts;        // embedded vertices touching the fragment
    std::vector<int> internal;        // non-embedded vertices, empty for a chord
    std::pair<int, int> chord{-1, -1};
};

class FaceEmbedder {
public:
    FaceEmbedder(const std::vector<std::pair<int, int>>& edges) {
        std::vector<int> verts;
        for (auto [u, v] : edges) {
            verts.push_back(u);
            verts.push_back(v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        n_ = static_cast<int>(verts.size());
        std::vector<int> local(kMaxOrder, -1);
        for (int i = 0; i < n_; ++i) local[verts[i]] = i;
        adj_.assign(n_, 0);
        for (auto [u, v] : edges) {
            adj_[local[u]] |= 1u << local[v];
            adj_[local[v]] |= 1u << local[u];
        }
        edge_total_ = static_cast<int>(edges.size());
    }

    bool planar() {
        if (edge_total_ <= 8) return true;  // too small to hold K_5 or K_{3,3}
        if (edge_total_ > 3 * n_ - 6) return false;
        embed_initial_cycle();
        for (;;) {
            auto fragments = find_fragments();
            if (fragments.empty()) return true;
            int best = -1;
            std::vector<size_t> best_faces;
            for (size_t i = 0; i < fragments.size(); ++i) {
                auto adm = admissible_faces(fragments[i]);
                if (adm.empty()) return false;
                if (best == -1 || adm.size() < best_faces.size()) {
                    best = static_cast<int>(i);
                    best_faces = adm;
                }
            }
            embed_path(alpha_path(fragments[best]), best_faces.front());
        }
    }

private:
    void embed_initial_cycle() {
        // Grow a spanning tree until a non-tree edge appears; the tree path
        // between its endpoints plus the edge is the starting cycle.
        std::vector<int> parent(n_, -2);
        std::vector<int> cycle;
        std::vector<int> stack{0};
        parent[0] = -1;
        while (!stack.empty() && cycle.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : bits(adj_[u])) {
                if (v == parent[u]) continue;
                if (parent[v] == -2) {
                    parent[v] = u;
                    stack.push_back(v);
                } else {
                    // Tree path u..lca..v closed by the edge uv.
                    std::uint32_t anc = 0;
                    for (int x = u; x != -1; x = parent[x]) anc |= 1u << x;
                    int lca = v;
                    while (!(anc >> lca & 1u)) lca = parent[lca];
                    for (int x = u; x != lca; x = parent[x]) cycle.push_back(x);
                    cycle.push_back(lca);
                    std::vector<int> down;
                    for (int x = v; x != lca; x = parent[x]) down.push_back(x);
                    cycle.insert(cycle.end(), down.rbegin(), down.rend());
                    break;
                }
            }
        }
        embedded_ = 0;
        embedded_edge_.assign(static_cast<size_t>(n_) * n_, false);
        for (size_t i = 0; i < cycle.size(); ++i) {
            embedded_ |= 1u << cycle[i];
            mark_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
        }
        faces_ = {cycle, cycle};
    }

    std::vector<Fragment> find_fragments() const {
        std::vector<Fragment> out;
        // Chords between embedded vertices.
        for (int u = 0; u < n_; ++u) {
            if (!(embedded_ >> u & 1u)) continue;
            for (int v : bits(adj_[u] & embedded_)) {
                if (v <= u || edge_marked(u, v)) continue;
                Fragment f;
                f.contacts = {u, v};
                f.chord = {u, v};
                out.push_back(std::move(f));
            }
        }
        // Connected clumps of non-embedded vertices.
        std::uint32_t todo = all_mask() & ~embedded_;
        while (todo) {
            int s = std::countr_zero(todo);
            std::uint32_t comp = 1u << s, frontier = comp;
            while (frontier) {
                int x = std::countr_zero(frontier);
                frontier &= frontier - 1;
                std::uint32_t fresh = adj_[x] & todo & ~comp;
                comp |= fresh;
                frontier |= fresh;
            }
            todo &= ~comp;
            Fragment f;
            std::uint32_t contacts = 0;
            for (int x : bits(comp)) {
                f.internal.push_back(x);
                contacts |= adj_[x] & embedded_;
            }
            for (int c : bits(contacts)) f.contacts.push_back(c);
            out.push_back(std::move(f));
        }
        return out;
    }

    std::vector<size_t> admissible_faces(const Fragment& f) const {
        std::vector<size_t> out;
        for (size_t i = 0; i < faces_.size(); ++i) {
            std::uint32_t boundary = 0;
            for (int v : faces_[i]) boundary |= 1u << v;
            bool ok = true;
            for (int c : f.contacts)
                if (!(boundary >> c & 1u)) ok = false;
            if (ok) out.push_back(i);
        }
        return out;
    }

    // A path through the fragment between two distinct contacts.
    std::vector<int> alpha_path(const Fragment& f) const {
        if (f.chord.first >= 0) return {f.chord.first, f.chord.second};
        std::uint32_t internal = 0;
        for (int x : f.internal) internal |= 1u << x;
        int start = f.contacts.front();
        std::vector<int> parent(n_, -2);
        std::queue<int> q;
        // Seed with internal neighbors of the start contact.
        for (int x : bits(adj_[start] & internal)) {
            parent[x] = -1;
            q.push(x);
        }
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            std::uint32_t emb_nbrs = adj_[x] & embedded_ & ~(1u << start);
            if (emb_nbrs) {
                int end = std::countr_zero(emb_nbrs);
                std::vector<int> path{end};
                for (int y = x; y != -1; y = parent[y]) path.push_back(y);
                path.push_back(start);
                std::reverse(path.begin(), path.end());
                return path;
            }
            for (int y : bits(adj_[x] & internal))
                if (parent[y] == -2) {
                    parent[y] = x;
                    q.push(y);
                }
        }
        throw GraphError("fragment with a single contact in a biconnected component");
    }

    void embed_path(const std::vector<int>& path, size_t face_idx) {
        std::vector<int> boundary = faces_[face_idx];
        int u = path.front(), v = path.back();
        size_t iu = std::find(boundary.begin(), boundary.end(), u) - boundary.begin();
        size_t iv = std::find(boundary.begin(), boundary.end(), v) - boundary.begin();
        const size_t k = boundary.size();
        std::vector<int> arc1, arc2;  // u..v and v..u along the boundary
        for (size_t i = iu; i != iv; i = (i + 1) % k) arc1.push_back(boundary[i]);
        arc1.push_back(v);
        for (size_t i = iv; i != iu; i = (i + 1) % k) arc2.push_back(boundary[i]);
        arc2.push_back(u);

        std::vector<int> interior(path.begin() + 1, path.end() - 1);
        std::vector<int> face1 = arc1;  // u..v, then the path walked back v..u
        face1.insert(face1.end(), interior.rbegin(), interior.rend());
        std::vector<int> face2 = arc2;
        face2.insert(face2.end(), interior.begin(), interior.end());

        faces_[face_idx] = std::move(face1);
        faces_.push_back(std::move(face2));

        for (int x : interior) embedded_ |= 1u << x;
        for (size_t i = 0; i + 1 < path.size(); ++i) mark_edge(path[i], path[i + 1]);
    }

    static std::vector<int> bits(std::uint32_t m) {
        std::vector<int> out;
        while (m) {
            out.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        return out;
    }

    std::uint32_t all_mask() const { return n_ == 32 ? ~0u : (1u << n_) - 1; }
    void mark_edge(int u, int v) {
        embedded_edge_[static_cast<size_t>(u) * n_ + v] = true;
        embedded_edge_[static_cast<size_t>(v) * n_ + u] = true;
    }
    bool edge_marked(int u, int v) const {
        return embedded_edge_[static_cast<size_t>(u) * n_ + v];
    }

    int n_ = 0;
    int edge_total_ = 0;
    std::vector<std::uint32_t> adj_;
    std::uint32_t embedded_ = 0;
    std::vector<bool> embedded_edge_;
    std::vector<std::vector<int>> faces_;
};

}  // namespace

bool is_planar(const MultiGraph& g) {
    MultiGraph s = underlying_simple(g);
    if (s.edge_count() <= 8) return true;
    BccState bcc(s);
    for (int v = 0; v < s.order(); ++v)
        if (bcc.disc[v] == -1) bcc.dfs(v, -1);
    for (const auto& comp : bcc.components) {
        if (comp.size() <= 2) continue;
        if (!FaceEmbedder(comp).planar()) return false;
    }
    return true;
}

bool is_k33(const MultiGraph& g) {
    if (g.order() != 6 || g.edge_count() != 9 || !g.is_simple()) return false;
    for (int v = 0; v < 6; ++v)
        if (g.degree(v) != 3) return false;
    auto parts = bipartition(g);
    return parts && std::popcount(parts->part_a) == 3;
}

namespace {

class MinorSearch {
public:
    MinorSearch(const MultiGraph& pattern, std::uint64_t budget)
        : budget_(budget) {
        pattern_ = underlying_simple(pattern);
        pat_canon_ = canonical_form(pattern_);
        pat_min_deg_ = pattern_.order() ? 1 << 30 : 0;
        for (int v = 0; v < pattern_.order(); ++v)
            pat_min_deg_ = std::min(pat_min_deg_, pattern_.degree(v));
    }

    bool contains(const MultiGraph& host) { return search(simplify(host)); }

private:
    // Simple host with the standard size-safe reductions applied: isolated
    // vertices dropped, and (for high-minimum-degree patterns) leaves and
    // degree-2 vertices contracted away.
    MultiGraph simplify(const MultiGraph& g) const {
        std::vector<std::vector<int>> adj(g.order());
        for (const auto& e : g.edge_list()) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        std::vector<bool> alive(g.order(), true);
        auto deg = [&](int v) { return static_cast<int>(adj[v].size()); };
        auto drop_edge = [&](int u, int v) {
            adj[u].erase(std::find(adj[u].begin(), adj[u].end(), v));
            adj[v].erase(std::find(adj[v].begin(), adj[v].end(), u));
        };
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < g.order(); ++v) {
                if (!alive[v]) continue;
                if (deg(v) == 0 && pattern_.edge_count() > 0) {
                    alive[v] = false;
                    changed = true;
                } else if (deg(v) == 1 && pat_min_deg_ >= 2) {
                    drop_edge(v, adj[v][0]);
                    alive[v] = false;
                    changed = true;
                } else if (deg(v) == 2 && pat_min_deg_ >= 3) {
                    int x = adj[v][0], y = adj[v][1];
                    drop_edge(v, x);
                    drop_edge(v, y);
                    alive[v] = false;
                    if (x != y && std::find(adj[x].begin(), adj[x].end(), y) == adj[x].end()) {
                        adj[x].push_back(y);
                        adj[y].push_back(x);
                    }
                    changed = true;
                }
            }
        }
        std::vector<int> relabel(g.order(), -1);
        int next = 0;
        for (int v = 0; v < g.order(); ++v)
            if (alive[v]) relabel[v] = next++;
        std::vector<EdgeSpec> edges;
        for (int u = 0; u < g.order(); ++u)
            for (int v : adj[u])
                if (u < v) edges.push_back({relabel[u], relabel[v], 1});
        return MultiGraph::build(next, edges);
    }

    MultiGraph delete_edge(const MultiGraph& g, int u, int v) const {
        std::vector<EdgeSpec> edges;
        for (const auto& e : g.edge_list())
            if (!(e.u == u && e.v == v)) edges.push_back(e);
        return MultiGraph::build(g.order(), edges);
    }

    MultiGraph contract_edge(const MultiGraph& g, int u, int v) const {
        // Merge v into u, dropping the loop and any parallels.
        std::vector<int> relabel(g.order());
        int next = 0;
        for (int x = 0; x < g.order(); ++x) relabel[x] = (x == v) ? -1 : next++;
        relabel[v] = relabel[u];
        std::vector<std::vector<bool>> seen(g.order(), std::vector<bool>(g.order(), false));
        std::vector<EdgeSpec> edges;
        for (const auto& e : g.edge_list()) {
            int a = relabel[e.u], b = relabel[e.v];
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            if (seen[a][b]) continue;
            seen[a][b] = true;
            edges.push_back({a, b, 1});
        }
        return MultiGraph::build(g.order() - 1, edges);
    }

    bool search(const MultiGraph& host) {
        if (host.order() < pattern_.order() || host.edge_count() < pattern_.edge_count())
            return false;
        CanonicalForm canon = canonical_form(host);
        if (canon == pat_canon_) return true;
        if (host.order() == pattern_.order() && host.edge_count() == pattern_.edge_count())
            return false;
        if (known_false_.count(canon.bytes)) return false;
        if (++nodes_ > budget_)
            throw BudgetExceeded("minor search budget exhausted after " +
                                 std::to_string(nodes_) + " nodes");
        bool surplus_vertices = host.order() > pattern_.order();
        bool surplus_edges = host.edge_count() > pattern_.edge_count();
        for (const auto& e : host.edge_list()) {
            if (surplus_vertices && search(simplify(contract_edge(host, e.u, e.v))))
                return true;
            if (surplus_edges && search(simplify(delete_edge(host, e.u, e.v))))
                return true;
        }
        known_false_.insert(canon.bytes);
        return false;
    }

    MultiGraph pattern_;
    CanonicalForm pat_canon_;
    int pat_min_deg_ = 0;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;

    struct BytesHash {
        std::size_t operator()(const std::vector<std::uint8_t>& b) const {
            std::size_t h = 1469598103934665603ull;
            for (std::uint8_t x : b) {
                h ^= x;
                h *= 1099511628211ull;
            }
            return h;
        }
    };
    std::unordered_set<std::vector<std::uint8_t>, BytesHash> known_false_;
};

}  // namespace

bool has_minor(const MultiGraph& host, const MultiGraph& pattern, std::uint64_t budget) {
    if (pattern.order() == 0) return true;
    if (!is_connected(pattern)) throw GraphError("has_minor expects a connected pattern");
    return MinorSearch(pattern, budget).contains(host);
}

bool is_planar_oracle(const MultiGraph& g) {
    MultiGraph s = underlying_simple(g);
    if (s.edge_count() <= 8) return true;
    MultiGraph k5 = MultiGraph::build(5, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1},
                                          {1, 2, 1}, {1, 3, 1}, {1, 4, 1},
                                          {2, 3, 1}, {2, 4, 1}, {3, 4, 1}});
    std::vector<EdgeSpec> k33e;
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) k33e.push_back({u, v, 1});
    MultiGraph k33 = MultiGraph::build(6, k33e);
    return !has_minor(s, k5) && !has_minor(s, k33);
}

}  // namespace ik
