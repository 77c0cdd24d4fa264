#ifndef IK_REDUCTION_HPP
#define IK_REDUCTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "ik/graph.hpp"

namespace ik {

// Terms of the edge-count prediction for the reduction at a vertex pair.
// NE counts edges incident to a or b; the V-sets never include a or b
// themselves. `degenerate` marks pairs where the one-step accounting behind
// the prediction breaks down (a vertex with two neighbors among the common
// degree-3 neighbors of a and b, overlapping terms, removal cascades, or
// chains of degree-2 vertices that collapse into a loop). When the flag is
// clear the prediction equals the simulated edge count; when it is set the
// prediction carries no guarantee and reduce() is the ground truth.
struct CountBreakdown {
    int ne = 0;
    int v3a = 0, v3b = 0, v3ab = 0;
    int v4ab = 0;
    int vy = 0;
    bool degenerate = false;

    int nv3() const { return v3a + v3b - v3ab; }
    int predicted(int host_edges) const { return host_edges - ne - (nv3() + v4ab + vy); }
};

struct ReductionStep {
    enum Kind { DeleteVertex, RemoveIsolated, RemoveDegreeOne, ContractDegreeTwo, DeleteLoop };
    Kind kind;
    Vertex vertex;      // acted-on vertex (original label)
    Vertex other = -1;  // merge target / removed-edge endpoint, when applicable
};

struct ReductionResult {
    MultiGraph reduced;
    int edge_count = 0;
    std::vector<ReductionStep> trace;
    std::string trace_digest() const;
};

// Deletes a and b, then repeatedly removes degree-0/1 vertices and contracts
// at degree-2 vertices (lowest original label first, contraction toward the
// lower-labeled neighbor) until minimum degree >= 3 or nothing remains.
ReductionResult reduce(const MultiGraph& g, Vertex a, Vertex b);

// Randomized processing order; used to check order-independence.
ReductionResult reduce_shuffled(const MultiGraph& g, Vertex a, Vertex b, std::uint64_t seed);

CountBreakdown count_equation(const BipartiteGraph& g, Vertex a, Vertex b);

enum class Verdict { Eliminates, Fails };

struct ObstructionOutcome {
    Verdict verdict;
    ReductionResult reduction;
};

// A pair eliminates when the reduction drops to 8 edges or fewer, or to
// exactly 9 edges without being K_{3,3}.
ObstructionOutcome obstruction_check(const MultiGraph& g, Vertex a, Vertex b);

struct EliminatingPair {
    Vertex a, b;
    ReductionResult reduction;
};

// Scans unordered pairs in lexicographic order; first eliminating pair wins.
// nullopt means "not eliminated here", never "intrinsically knotted".
std::optional<EliminatingPair> obstruction_scan(const MultiGraph& g);

}  // namespace ik

#endif
