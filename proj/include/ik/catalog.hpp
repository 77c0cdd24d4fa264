#ifndef IK_CATALOG_HPP
#define IK_CATALOG_HPP

#include <string>
#include <vector>

#include "ik/graph.hpp"

namespace ik {

struct CatalogEntry {
    std::string name;
    MultiGraph graph;
    std::string provenance;
};

// Known names: k7, k33, k33e, k3311, heawood, cousin89, cousin110,
// k33tilde, p10tilde. Throws GraphError for anything else.
CatalogEntry named(const std::string& name);
std::vector<std::string> catalog_names();

// Standard graph6 (short form, order <= 62). Encoding requires a simple graph.
std::string graph6_encode(const MultiGraph& g);
MultiGraph graph6_decode(const std::string& s);

}  // namespace ik

#endif
