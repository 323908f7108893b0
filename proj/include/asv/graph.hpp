#pragma once

#include <cstddef>
#include <vector>

#include "asv/arena.hpp"

namespace asv {

struct SccRecord {
    int id = 0;
    std::vector<int> vertices;  // sorted
    bool is_trivial = true;     // single vertex without a self-loop
};

// Strongly connected components in reverse topological order (sinks first).
std::vector<SccRecord> tarjan_scc(const Arena& arena);

// Map vertex -> position in the vector returned by tarjan_scc.
std::vector<int> scc_of_vertex(const std::vector<SccRecord>& sccs, int num_vertices);

// Non-trivial SCCs containing at least one vertex reachable from `from`.
std::vector<SccRecord> reachable_nontrivial_sccs(const Arena& arena, int from);

struct SimpleCycle {
    std::vector<int> vertices;  // starts at the smallest vertex index
    std::vector<int> edges;
    Rational mp0;
    Rational mp1;
};

// Johnson's algorithm restricted to one SCC, with parallel edges giving
// distinct cycles. Throws ResourceError once more than max_cycles are found.
std::vector<SimpleCycle> enumerate_simple_cycles(const Arena& arena, const SccRecord& scc,
                                                 std::size_t max_cycles = 100000);

// Largest / smallest cycle mean in dimension `dim` over cycles reachable from
// `start` (Karp's algorithm per SCC). Every vertex has a successor, so some
// cycle is always reachable.
Rational karp_max_mean(const Arena& arena, int dim, int start);
Rational karp_min_mean(const Arena& arena, int dim, int start);

}  // namespace asv
