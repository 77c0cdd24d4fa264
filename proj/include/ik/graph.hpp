#ifndef IK_GRAPH_HPP
#define IK_GRAPH_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ik {

class GraphError : public std::runtime_error {
public:
    explicit GraphError(const std::string& msg) : std::runtime_error(msg) {}
};

using Vertex = int;

struct EdgeSpec {
    Vertex u;
    Vertex v;
    int mult = 1;
};

constexpr int kMaxOrder = 32;

// Small undirected multigraph, immutable after construction.
// Loops are rejected at construction; multiplicities are stored per
// unordered vertex pair.
class MultiGraph {
public:
    MultiGraph() = default;

    static MultiGraph build(int order, const std::vector<EdgeSpec>& edges);

    int order() const { return n_; }

    // Sum of multiplicities (a bi-gon counts as 2 edges).
    int edge_count() const { return edge_count_; }

    int multiplicity(Vertex u, Vertex v) const { return mult_[idx(u, v)]; }
    bool adjacent(Vertex u, Vertex v) const { return u != v && mult_[idx(u, v)] > 0; }

    // Degree counting multiplicity.
    int degree(Vertex v) const { return degree_[v]; }
    // Number of distinct neighbors.
    int simple_degree(Vertex v) const;

    std::uint32_t neighbor_mask(Vertex v) const { return adj_[v]; }
    std::vector<Vertex> neighbors(Vertex v) const;

    bool is_simple() const;
    std::vector<EdgeSpec> edge_list() const;

    bool operator==(const MultiGraph& o) const {
        return n_ == o.n_ && mult_ == o.mult_;
    }

private:
    int idx(Vertex u, Vertex v) const { return u * n_ + v; }
    void check_vertex(Vertex v) const;

    int n_ = 0;
    int edge_count_ = 0;
    std::array<std::uint32_t, kMaxOrder> adj_{};
    std::array<int, kMaxOrder> degree_{};
    std::vector<std::uint8_t> mult_;
};

// Two-coloring of a graph: bit masks of the parts. Deterministic when
// produced by bipartition(): the lowest vertex of each component lands in A.
struct Bipartition {
    std::uint32_t part_a = 0;
    std::uint32_t part_b = 0;
};

std::optional<Bipartition> bipartition(const MultiGraph& g);

// Simple graph plus a fixed two-part coloring where every edge crosses.
class BipartiteGraph {
public:
    BipartiteGraph() = default;

    // Throws if g is not simple or some edge stays inside a part.
    static BipartiteGraph build(const MultiGraph& g, std::uint32_t part_a);
    // Detects the bipartition; nullopt if g has an odd cycle.
    static std::optional<BipartiteGraph> from_graph(const MultiGraph& g);

    const MultiGraph& graph() const { return g_; }
    std::uint32_t part_a() const { return part_a_; }
    std::uint32_t part_b() const { return part_b_; }
    bool in_part_a(Vertex v) const { return (part_a_ >> v) & 1u; }

    bool operator==(const BipartiteGraph& o) const {
        return g_ == o.g_ && part_a_ == o.part_a_;
    }

private:
    MultiGraph g_;
    std::uint32_t part_a_ = 0;
    std::uint32_t part_b_ = 0;
};

// Vertex counts of one part by degree; degrees 3..7 supported.
struct DegreeProfile {
    std::array<int, 8> count{};  // count[d] = vertices of degree d

    int vertices() const;
    int degree_sum() const;

    // The [n5, n4, n3] form used throughout; degrees 6/7 prepended when present.
    std::string to_string() const;

    bool operator==(const DegreeProfile& o) const = default;
    // Orders by (n7, n6, n5, n4) descending-first so that the convention
    // "A carries the larger high-degree counts" is a simple comparison.
    bool dominates(const DegreeProfile& o) const;
};

// Profiles of the two parts, normalized so profile A dominates.
std::pair<DegreeProfile, DegreeProfile> degree_profile(const BipartiteGraph& g);

int distance(const MultiGraph& g, Vertex u, Vertex v);  // throws GraphError if unreachable
bool is_connected(const MultiGraph& g);

// Length of a shortest cycle (multiplicity-2 pairs count as 2-cycles); 0 if acyclic.
int girth(const MultiGraph& g);

}  // namespace ik

#endif
