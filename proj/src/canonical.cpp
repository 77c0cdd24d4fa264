#include "ik/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ik {

std::string CanonicalForm::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

std::size_t CanonicalForm::hash() const {
    // FNV-1a
    std::size_t h = 1469598103934665603ull;
    for (std::uint8_t b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

// Iterated refinement: a vertex's color is rebuilt from its old color and the
// sorted multiset of (neighbor color, edge multiplicity). Color ids are
// assigned by sorting the key values, so they are label-invariant.
std::vector<int> refine_colors(const MultiGraph& g, std::vector<int> color) {
    const int n = g.order();
    int num_colors = 0;
    for (int v = 0; v < n; ++v) num_colors = std::max(num_colors, color[v] + 1);
    for (;;) {
        std::map<std::vector<int>, std::vector<int>> groups;
        for (int v = 0; v < n; ++v) {
            std::vector<int> key{color[v]};
            std::vector<std::pair<int, int>> nbr;
            for (Vertex u : g.neighbors(v)) nbr.emplace_back(color[u], g.multiplicity(v, u));
            std::sort(nbr.begin(), nbr.end());
            for (auto& [c, m] : nbr) {
                key.push_back(c);
                key.push_back(m);
            }
            groups[key].push_back(v);
        }
        int next = 0;
        std::vector<int> fresh(n);
        for (auto& [key, verts] : groups) {
            for (int v : verts) fresh[v] = next;
            ++next;
        }
        if (next == num_colors) return fresh;
        num_colors = next;
        color = std::move(fresh);
    }
}

// Finds the lexicographically smallest certificate over all vertex orders
// that respect the refined color cells. Cells are consumed in color order;
// within the open cell, only candidates achieving the minimal next chunk are
// explored, with pruning against the best complete certificate found so far.
class CanonSearch {
public:
    CanonSearch(const MultiGraph& g, const std::vector<int>& color,
                const std::vector<int>& tag)
        : g_(g), n_(g.order()), tag_(tag) {
        if (n_ > 0)
            cells_.assign(*std::max_element(color.begin(), color.end()) + 1, {});
        for (int v = 0; v < n_; ++v) cells_[color[v]].push_back(v);
        placed_mask_ = 0;
    }

    CanonicalForm run() {
        if (n_ == 0) return {{0}, {}};
        cur_.clear();
        cur_.push_back(static_cast<std::uint8_t>(n_));
        placed_.clear();
        dfs();
        CanonicalForm out;
        out.bytes = best_;
        out.labeling = best_perm_;
        return out;
    }

private:
    void dfs() {
        if (!best_.empty()) {
            // Prune whenever the current prefix already exceeds the best.
            auto mis = std::mismatch(cur_.begin(), cur_.end(), best_.begin());
            if (mis.first != cur_.end() && *mis.first > *mis.second) return;
        }
        if (static_cast<int>(placed_.size()) == n_) {
            if (best_.empty() || cur_ < best_) {
                best_ = cur_;
                best_perm_ = placed_;
            }
            return;
        }
        // Earliest cell with an unplaced vertex.
        const std::vector<int>* cell = nullptr;
        for (const auto& c : cells_) {
            for (int v : c)
                if (!(placed_mask_ >> v & 1u)) {
                    cell = &c;
                    break;
                }
            if (cell) break;
        }
        // Chunk for a candidate: its tag byte, then multiplicities against
        // the already placed vertices.
        std::vector<std::pair<std::vector<std::uint8_t>, int>> cands;
        for (int v : *cell) {
            if (placed_mask_ >> v & 1u) continue;
            std::vector<std::uint8_t> chunk;
            chunk.push_back(static_cast<std::uint8_t>(tag_[v]));
            for (int u : placed_) chunk.push_back(static_cast<std::uint8_t>(g_.multiplicity(v, u)));
            cands.emplace_back(std::move(chunk), v);
        }
        const auto& min_chunk =
            std::min_element(cands.begin(), cands.end())->first;
        for (auto& [chunk, v] : cands) {
            if (chunk != min_chunk) continue;
            size_t mark = cur_.size();
            cur_.insert(cur_.end(), chunk.begin(), chunk.end());
            placed_.push_back(v);
            placed_mask_ |= 1u << v;
            dfs();
            placed_mask_ &= ~(1u << v);
            placed_.pop_back();
            cur_.resize(mark);
        }
    }

    const MultiGraph& g_;
    int n_;
    std::vector<int> tag_;
    std::vector<std::vector<int>> cells_;
    std::vector<std::uint8_t> cur_, best_;
    std::vector<int> placed_, best_perm_;
    std::uint32_t placed_mask_;
};

CanonicalForm canonical_with_tags(const MultiGraph& g, const std::vector<int>& tag) {
    const int n = g.order();
    std::vector<std::vector<int>> keys(n);
    for (int v = 0; v < n; ++v)
        keys[v] = {tag[v], g.degree(v), g.simple_degree(v)};
    std::map<std::vector<int>, int> order;
    for (auto& k : keys) order[k] = 0;
    int next = 0;
    for (auto& [k, id] : order) id = next++;
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = order[keys[v]];
    color = refine_colors(g, color);
    return CanonSearch(g, color, tag).run();
}

}  // namespace

CanonicalForm canonical_form(const MultiGraph& g) {
    return canonical_with_tags(g, std::vector<int>(g.order(), 0));
}

CanonicalForm canonical_form(const BipartiteGraph& g) {
    const int n = g.graph().order();
    std::vector<int> tag(n), swapped(n);
    for (int v = 0; v < n; ++v) {
        tag[v] = g.in_part_a(v) ? 0 : 1;
        swapped[v] = 1 - tag[v];
    }
    CanonicalForm a = canonical_with_tags(g.graph(), tag);
    CanonicalForm b = canonical_with_tags(g.graph(), swapped);
    return a.bytes <= b.bytes ? a : b;
}

bool isomorphic(const MultiGraph& a, const MultiGraph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

bool isomorphic_brute_force(const MultiGraph& a, const MultiGraph& b) {
    const int n = a.order();
    if (n != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (a.multiplicity(u, v) != b.multiplicity(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace ik
