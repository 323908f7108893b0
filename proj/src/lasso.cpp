#include "asv/lasso.hpp"

#include "asv/errors.hpp"

namespace asv {

std::vector<int> Lasso::prefix_vertices(const Arena& arena) const {
    std::vector<int> out;
    for (int e : prefix) out.push_back(arena.edge(e).src);
    return out;
}

std::vector<int> Lasso::cycle_vertices(const Arena& arena) const {
    std::vector<int> out;
    for (int e : cycle) out.push_back(arena.edge(e).src);
    return out;
}

std::pair<Rational, Rational> cycle_mean(const Arena& arena, const std::vector<int>& edges) {
    if (edges.empty()) throw DomainError("empty cycle");
    Rational s0 = 0, s1 = 0;
    for (int e : edges) {
        s0 += arena.edge(e).w0;
        s1 += arena.edge(e).w1;
    }
    Rational len = static_cast<long>(edges.size());
    return {s0 / len, s1 / len};
}

Lasso make_lasso(const Arena& arena, int start, std::vector<int> prefix_edges, std::vector<int> cycle_edges) {
    if (cycle_edges.empty()) throw DomainError("lasso cycle must be non-empty");
    int at = start;
    auto step = [&](int e) {
        if (e < 0 || e >= arena.num_edges() || arena.edge(e).src != at) throw DomainError("lasso is not a connected walk");
        at = arena.edge(e).dst;
    };
    for (int e : prefix_edges) step(e);
    int cycle_start = at;
    for (int e : cycle_edges) step(e);
    if (at != cycle_start) throw DomainError("lasso cycle does not close");
    Lasso l;
    l.start = start;
    l.prefix = std::move(prefix_edges);
    l.cycle = std::move(cycle_edges);
    std::tie(l.payoff0, l.payoff1) = cycle_mean(arena, l.cycle);
    return l;
}

namespace {

int resolve_step(const Arena& arena, int from, int to) {
    int found = -1;
    for (int e : arena.out_edges(from)) {
        if (arena.edge(e).dst != to) continue;
        if (found >= 0 && (arena.edge(found).w0 != arena.edge(e).w0 || arena.edge(found).w1 != arena.edge(e).w1)) {
            throw DomainError("ambiguous transition " + arena.name(from) + "->" + arena.name(to) +
                              " (parallel edges with different weights)");
        }
        if (found < 0) found = e;
    }
    if (found < 0) throw DomainError("non-edge transition " + arena.name(from) + "->" + arena.name(to));
    return found;
}

}  // namespace

std::pair<Rational, Rational> lasso_payoff(const Arena& arena, const std::vector<int>& prefix,
                                           const std::vector<int>& cycle) {
    if (cycle.empty()) throw DomainError("lasso cycle must be non-empty");
    for (std::size_t i = 0; i + 1 < prefix.size(); ++i) resolve_step(arena, prefix[i], prefix[i + 1]);
    if (!prefix.empty()) resolve_step(arena, prefix.back(), cycle.front());
    std::vector<int> edges;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        edges.push_back(resolve_step(arena, cycle[i], cycle[(i + 1) % cycle.size()]));
    }
    return cycle_mean(arena, edges);
}

}  // namespace asv
