#pragma once

#include <vector>

#include "asv/arena.hpp"
#include "asv/errors.hpp"

namespace asv {

// Reachable fragment of the product of an arena with the powerset of visited
// vertices. Vertex 0 is the root (root, {root}).
struct ExtendedArena {
    Arena arena;                          // weights copied from base edges
    std::vector<int> base_vertex;         // extended vertex -> base vertex
    std::vector<std::vector<int>> visited;  // extended vertex -> sorted P
    std::vector<int> base_edge;           // extended edge -> base edge
};

// Built lazily by BFS from (root, {root}); throws ResourceError when more than
// limits.max_extended_vertices vertices would be created.
ExtendedArena build_extended_game(const Arena& base, int root, const Limits& limits = {});

}  // namespace asv
