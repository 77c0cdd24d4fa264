#ifndef IK_IO_HPP
#define IK_IO_HPP

#include <filesystem>
#include <string>

#include "ik/moves.hpp"

namespace ik {

// JSON-lines persistence. Writes are atomic (temp file + rename); loading
// re-verifies every stored canonical form against the stored graph.
void store_closure(const std::filesystem::path& path, const FamilyClosure& closure);
FamilyClosure load_closure(const std::filesystem::path& path);

// Serialized multigraph: graph6 for simple graphs, explicit edge list with
// multiplicities otherwise.
std::string graph_to_json(const MultiGraph& g);
MultiGraph graph_from_json(const std::string& line);

void write_text_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace ik

#endif
