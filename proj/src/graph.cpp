#include "asv/graph.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "asv/errors.hpp"

namespace asv {

std::vector<SccRecord> tarjan_scc(const Arena& arena) {
    const int n = arena.num_vertices();
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    std::vector<SccRecord> out;
    int counter = 0;

    // Iterative DFS: frames hold (vertex, position in its out-edge list).
    std::vector<std::pair<int, std::size_t>> frames;
    for (int root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        frames.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& [v, pos] = frames.back();
            const auto& outs = arena.out_edges(v);
            if (pos < outs.size()) {
                int w = arena.edge(outs[pos++]).dst;
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            int done = v;
            frames.pop_back();
            if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[done]);
            if (low[done] != index[done]) continue;
            SccRecord rec;
            rec.id = static_cast<int>(out.size());
            int w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                rec.vertices.push_back(w);
            } while (w != done);
            std::sort(rec.vertices.begin(), rec.vertices.end());
            rec.is_trivial = rec.vertices.size() == 1;
            if (rec.is_trivial) {
                for (int e : arena.out_edges(done)) {
                    if (arena.edge(e).dst == done) rec.is_trivial = false;
                }
            }
            out.push_back(std::move(rec));
        }
    }
    return out;
}

std::vector<int> scc_of_vertex(const std::vector<SccRecord>& sccs, int num_vertices) {
    std::vector<int> of(num_vertices, -1);
    for (std::size_t i = 0; i < sccs.size(); ++i) {
        for (int v : sccs[i].vertices) of[v] = static_cast<int>(i);
    }
    return of;
}

std::vector<SccRecord> reachable_nontrivial_sccs(const Arena& arena, int from) {
    auto reach = reachable_from(arena, from);
    std::vector<SccRecord> out;
    for (auto& s : tarjan_scc(arena)) {
        if (!s.is_trivial && reach[s.vertices.front()]) out.push_back(std::move(s));
    }
    return out;
}

std::vector<SimpleCycle> enumerate_simple_cycles(const Arena& arena, const SccRecord& scc, std::size_t max_cycles) {
    const int n = arena.num_vertices();
    std::vector<bool> in_scc(n, false);
    for (int v : scc.vertices) in_scc[v] = true;

    std::vector<SimpleCycle> out;
    std::vector<bool> allowed(n), blocked(n);
    std::vector<std::vector<int>> block_map(n);
    std::vector<int> edge_stack;

    std::function<void(int)> unblock = [&](int u) {
        blocked[u] = false;
        auto pending = std::move(block_map[u]);
        block_map[u].clear();
        for (int w : pending) {
            if (blocked[w]) unblock(w);
        }
    };

    for (int s : scc.vertices) {
        for (int v = 0; v < n; ++v) {
            allowed[v] = in_scc[v] && v >= s;
            blocked[v] = false;
            block_map[v].clear();
        }
        std::function<bool(int)> circuit = [&](int v) -> bool {
            bool found = false;
            blocked[v] = true;
            for (int e : arena.out_edges(v)) {
                int w = arena.edge(e).dst;
                if (!allowed[w]) continue;
                if (w == s) {
                    edge_stack.push_back(e);
                    SimpleCycle c;
                    c.edges = edge_stack;
                    for (int ce : c.edges) c.vertices.push_back(arena.edge(ce).src);
                    Rational s0 = 0, s1 = 0;
                    for (int ce : c.edges) {
                        s0 += arena.edge(ce).w0;
                        s1 += arena.edge(ce).w1;
                    }
                    Rational len = static_cast<long>(c.edges.size());
                    c.mp0 = s0 / len;
                    c.mp1 = s1 / len;
                    out.push_back(std::move(c));
                    edge_stack.pop_back();
                    if (out.size() > max_cycles) {
                        throw ResourceError("simple-cycle count exceeds guard (" + std::to_string(max_cycles) + ")");
                    }
                    found = true;
                } else if (!blocked[w]) {
                    edge_stack.push_back(e);
                    if (circuit(w)) found = true;
                    edge_stack.pop_back();
                }
            }
            if (found) {
                unblock(v);
            } else {
                for (int e : arena.out_edges(v)) {
                    int w = arena.edge(e).dst;
                    if (!allowed[w]) continue;
                    auto& bm = block_map[w];
                    if (std::find(bm.begin(), bm.end(), v) == bm.end()) bm.push_back(v);
                }
            }
            return found;
        };
        circuit(s);
    }
    return out;
}

namespace {

// Karp's maximum cycle mean inside one strongly connected component.
Rational karp_scc(const Arena& arena, const SccRecord& scc, int dim, int sign) {
    const int k = static_cast<int>(scc.vertices.size());
    std::vector<int> local(arena.num_vertices(), -1);
    for (int i = 0; i < k; ++i) local[scc.vertices[i]] = i;
    std::vector<std::vector<std::optional<Rational>>> D(k + 1, std::vector<std::optional<Rational>>(k));
    D[0][0] = Rational(0);
    for (int i = 1; i <= k; ++i) {
        for (int u = 0; u < k; ++u) {
            if (!D[i - 1][u]) continue;
            for (int e : arena.out_edges(scc.vertices[u])) {
                int w = local[arena.edge(e).dst];
                if (w < 0) continue;
                Rational cand = *D[i - 1][u] + sign * arena.edge(e).weight(dim);
                if (!D[i][w] || cand > *D[i][w]) D[i][w] = cand;
            }
        }
    }
    std::optional<Rational> best;
    for (int v = 0; v < k; ++v) {
        if (!D[k][v]) continue;
        std::optional<Rational> worst;
        for (int i = 0; i < k; ++i) {
            if (!D[i][v]) continue;
            Rational r = (*D[k][v] - *D[i][v]) / (k - i);
            if (!worst || r < *worst) worst = r;
        }
        if (worst && (!best || *worst > *best)) best = worst;
    }
    return *best;
}

Rational karp_extreme(const Arena& arena, int dim, int start, int sign) {
    std::optional<Rational> best;
    for (const auto& scc : reachable_nontrivial_sccs(arena, start)) {
        Rational m = karp_scc(arena, scc, dim, sign);
        if (!best || m > *best) best = m;
    }
    return sign * *best;
}

}  // namespace

Rational karp_max_mean(const Arena& arena, int dim, int start) { return karp_extreme(arena, dim, start, 1); }

Rational karp_min_mean(const Arena& arena, int dim, int start) { return karp_extreme(arena, dim, start, -1); }

}  // namespace asv
