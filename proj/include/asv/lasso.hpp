#pragma once

#include <utility>
#include <vector>

#include "asv/arena.hpp"

namespace asv {

// Eventually periodic play prefix . cycle^omega, stored as edge indices.
struct Lasso {
    int start = 0;
    std::vector<int> prefix;
    std::vector<int> cycle;
    Rational payoff0;
    Rational payoff1;

    std::vector<int> prefix_vertices(const Arena& arena) const;
    std::vector<int> cycle_vertices(const Arena& arena) const;
};

// Checks connectivity and fills in the payoffs.
Lasso make_lasso(const Arena& arena, int start, std::vector<int> prefix_edges,
                 std::vector<int> cycle_edges);

// Mean payoff of prefix.cycle^omega given as vertex sequences. Between two
// vertices, parallel edges must agree on both weights or the step is ambiguous.
std::pair<Rational, Rational> lasso_payoff(const Arena& arena, const std::vector<int>& prefix,
                                           const std::vector<int>& cycle);

// Mean weight of a closed walk given as edges.
std::pair<Rational, Rational> cycle_mean(const Arena& arena, const std::vector<int>& edges);

}  // namespace asv
