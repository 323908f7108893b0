#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asv/arena.hpp"

namespace asv {

// Finite-state deterministic strategy. The memory is updated on every observed
// vertex (including the initial one) and the choice at an owned vertex is made
// from the memory state reached after observing that vertex.
// Missing transitions keep the current state. A missing choice defaults to the
// only edge of a single-successor vertex and is an error anywhere else the pair
// is reachable.
struct MealyStrategy {
    int player = 0;
    int num_states = 1;
    int initial = 0;
    std::vector<std::string> state_names;
    std::map<std::pair<int, int>, int> transition;  // (state, vertex) -> state
    std::map<std::pair<int, int>, int> choice;      // (state, vertex) -> edge

    int next(int state, int vertex) const;
    std::optional<int> choose(int state, int vertex) const;
    bool memoryless() const { return num_states == 1; }

    // choice_per_vertex[v] is an edge index, or -1 where the player does not move.
    static MealyStrategy memoryless_from(const Arena& arena, int player,
                                         const std::vector<int>& choice_per_vertex);
};

// Keeps only sigma0's edge at every Player-0 vertex; all other edges survive.
Arena fix_player0_memoryless(const Arena& arena, const MealyStrategy& sigma0);

// One-player (Follower) graph obtained by running sigma0 alongside the arena.
struct Product {
    Arena arena;
    std::vector<int> base_vertex;  // product vertex -> arena vertex
    std::vector<int> state;        // product vertex -> memory state
    std::vector<int> base_edge;    // product edge -> arena edge
    int initial = 0;               // product vertex of the root (only when rooted)
};

// With a root, only pairs reachable from (root, next(initial, root)) are built.
// Without one, every (vertex, state) pair is materialised and sigma0 must be
// total on Player-0 vertices.
Product product_with_strategy(const Arena& arena, const MealyStrategy& sigma0,
                              std::optional<int> root = std::nullopt);

// Every memoryless Player-0 strategy that differs on vertices in `relevant`
// (other Player-0 vertices take their first edge). Throws ResourceError when
// the count exceeds `max_count`.
std::vector<MealyStrategy> enumerate_memoryless(const Arena& arena, int player,
                                                const std::vector<bool>& relevant,
                                                std::size_t max_count);

}  // namespace asv

namespace asv {

// Keeps only the strategy's edge at every vertex owned by sigma.player.
// Also reports which original edge each surviving edge came from.
Arena fix_memoryless(const Arena& arena, const MealyStrategy& sigma, std::vector<int>* kept_edges = nullptr);

}  // namespace asv
