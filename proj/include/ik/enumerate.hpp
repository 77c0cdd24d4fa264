#ifndef IK_ENUMERATE_HPP
#define IK_ENUMERATE_HPP

#include <functional>
#include <vector>

#include "ik/graph.hpp"

namespace ik {

struct ProfilePair {
    DegreeProfile a, b;
    std::string to_string() const { return a.to_string() + " x " + b.to_string(); }
};

// All per-part profile pairs with the given degree ceiling and both sides
// summing to `edge_total`, normalized so A dominates.
std::vector<ProfilePair> admissible_profiles(int max_degree, int edge_total = 22);

// Streams every connected simple bipartite graph realizing the profile pair,
// exactly one per isomorphism class (part-swap-aware). Backtracking over the
// biadjacency matrix with sorted-row pruning; canonical-form dedup is the
// correctness contract, the pruning only trims the search.
void generate(const ProfilePair& pair, const std::function<void(const BipartiteGraph&)>& emit);

std::vector<BipartiteGraph> generate_list(const ProfilePair& pair);

// Union over all admissible profiles.
void generate_all(int max_degree,
                  const std::function<void(const ProfilePair&, const BipartiteGraph&)>& emit);

// Lemma-scale generality: every simple bipartite graph with the given
// per-part degree lists (any degrees, disconnected allowed), one per
// part-respecting-or-swapping isomorphism class.
void generate_with_degrees(const std::vector<int>& part_a_degrees,
                           const std::vector<int>& part_b_degrees, bool connected_only,
                           const std::function<void(const BipartiteGraph&)>& emit);

// Test oracle: enumerates every labeled biadjacency matrix with the given
// row/column degree multisets and counts isomorphism classes by exhaustive
// permutation dedup. Independent of generate()'s pruning and canonical forms.
int count_labeled_classes_brute_force(const std::vector<int>& part_a_degrees,
                                      const std::vector<int>& part_b_degrees,
                                      bool connected_only);
int count_labeled_classes_brute_force(const ProfilePair& pair);

}  // namespace ik

#endif
