#ifndef IK_MOVES_HPP
#define IK_MOVES_HPP

#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "ik/canonical.hpp"
#include "ik/graph.hpp"

namespace ik {

// Replaces the edges of triangle {a,b,c} by a new vertex joined to all three.
// Edge count is preserved. Throws unless the vertices are pairwise adjacent.
MultiGraph nabla_y(const MultiGraph& g, Vertex a, Vertex b, Vertex c);

struct YNablaResult {
    MultiGraph graph;
    // Set when some triangle edge already existed and the parallel copy was
    // merged away, so the edge count dropped.
    bool simplified = false;
};

// Removes a degree-3 vertex and joins its three neighbors into a triangle.
// Requires three distinct neighbors, each along a single edge.
YNablaResult y_nabla(const MultiGraph& g, Vertex v);

enum class MoveKind { NablaY, YNabla };

struct FamilyClosure {
    CanonicalForm seed;
    // Canonical form -> a representative graph.
    std::map<CanonicalForm, MultiGraph> members;
    std::vector<std::tuple<CanonicalForm, CanonicalForm, MoveKind>> edges_between;
    // True if some eligible degree-3 vertex had pre-joined neighbors anywhere
    // in the closure; such simplifying moves are not followed.
    bool simplification_seen = false;
};

// Closure of the seed under both moves, deduplicated by canonical form.
// Simplifying y-nabla moves (which would change the edge count) are recorded
// via `simplification_seen` but never applied.
FamilyClosure family_closure(const MultiGraph& seed);

// Closure under nabla-y only, seed included.
std::set<CanonicalForm> nabla_descendants(const MultiGraph& seed);

// All graphs obtained by splitting v into an adjacent pair and distributing
// its neighbors over the two copies (both sides nonempty, up to swap).
std::vector<MultiGraph> vertex_splits(const MultiGraph& g, Vertex v);

// Single-edge deletions and contractions, isolated vertices dropped,
// deduplicated by canonical form.
std::vector<MultiGraph> one_step_minors(const MultiGraph& g);

}  // namespace ik

#endif
