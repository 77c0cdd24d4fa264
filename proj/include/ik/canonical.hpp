#ifndef IK_CANONICAL_HPP
#define IK_CANONICAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ik/graph.hpp"

namespace ik {

// Relabeling-invariant certificate. Two graphs get equal bytes iff they are
// isomorphic (respecting or swapping parts, for the bipartite variant).
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;
    // labeling[i] = original vertex placed at canonical position i.
    std::vector<int> labeling;

    bool operator==(const CanonicalForm& o) const { return bytes == o.bytes; }
    bool operator<(const CanonicalForm& o) const { return bytes < o.bytes; }
    std::string hex() const;
    std::size_t hash() const;
};

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& c) const { return c.hash(); }
};

CanonicalForm canonical_form(const MultiGraph& g);
CanonicalForm canonical_form(const BipartiteGraph& g);

bool isomorphic(const MultiGraph& a, const MultiGraph& b);

// Exhaustive permutation check, kept independent of canonical_form as its
// test oracle. Only sensible for small orders.
bool isomorphic_brute_force(const MultiGraph& a, const MultiGraph& b);

}  // namespace ik

#endif
