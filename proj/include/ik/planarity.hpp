#ifndef IK_PLANARITY_HPP
#define IK_PLANARITY_HPP

#include <cstdint>

#include "ik/graph.hpp"

namespace ik {

class BudgetExceeded : public GraphError {
public:
    explicit BudgetExceeded(const std::string& msg) : GraphError(msg) {}
};

// Planarity of the underlying simple structure; parallel edges never change
// the verdict. Face-embedding algorithm over biconnected components.
bool is_planar(const MultiGraph& g);

// Independent cross-check: nonplanar iff a K_5 or K_{3,3} minor exists.
bool is_planar_oracle(const MultiGraph& g);

// Simple, 6 vertices, 9 edges, 3-regular, bipartite 3/3.
bool is_k33(const MultiGraph& g);

// Exact minor containment by branch and bound over single-edge deletions and
// contractions of the host, memoized on canonical forms. Throws
// BudgetExceeded once `budget` search nodes have been expanded; a verdict is
// never guessed. Pattern must be connected and simple.
bool has_minor(const MultiGraph& host, const MultiGraph& pattern,
               std::uint64_t budget = 50'000'000);

}  // namespace ik

#endif
