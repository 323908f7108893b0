#include "asv/zerosum.hpp"

#include <algorithm>
#include <functional>

#include "asv/graph.hpp"
#include "asv/perturb.hpp"
#include "asv/solver.hpp"

namespace asv {

namespace {

// The unique p/q with q <= n inside [a - r, a + r], closest to a.
Rational snap(const Rational& a, const Rational& r, int n) {
    std::optional<Rational> best;
    for (int q = 1; q <= n; ++q) {
        Rational aq = a * q;
        for (const Integer& p : {floor_of(aq), ceil_of(aq)}) {
            Rational cand(p, q);
            cand.canonicalize();
            Rational dist = abs_of(cand - a);
            if (dist <= r && (!best || dist < abs_of(*best - a))) best = cand;
        }
    }
    if (!best) throw std::logic_error("value iteration window holds no small-denominator rational");
    return *best;
}

bool guarantees(const Arena& arena, const MealyStrategy& sigma, const std::vector<Rational>& value) {
    Arena fixed = fix_memoryless(arena, sigma);
    for (int u = 0; u < arena.num_vertices(); ++u) {
        if (sigma.player == 0 ? karp_min_mean(fixed, 0, u) < value[u] : karp_max_mean(fixed, 0, u) > value[u]) {
            return false;
        }
    }
    return true;
}

// Positional optimal strategy for `player`: try the last value-iteration
// argmax/argmin restricted to value-preserving edges, otherwise search all
// combinations of value-preserving edges.
MealyStrategy extract(const Arena& arena, int player, const std::vector<Rational>& value,
                      const std::vector<int>& greedy, const Limits& limits) {
    std::vector<std::vector<int>> keep(arena.num_vertices());
    std::vector<int> first(arena.num_vertices(), -1);
    for (int u = 0; u < arena.num_vertices(); ++u) {
        if (arena.owner(u) != player) continue;
        for (int e : arena.out_edges(u)) {
            if (value[arena.edge(e).dst] == value[u]) keep[u].push_back(e);
        }
        first[u] = std::find(keep[u].begin(), keep[u].end(), greedy[u]) != keep[u].end() ? greedy[u] : keep[u].front();
    }
    MealyStrategy cand = MealyStrategy::memoryless_from(arena, player, first);
    if (guarantees(arena, cand, value)) return cand;

    std::vector<int> owned;
    std::size_t count = 1;
    for (int u = 0; u < arena.num_vertices(); ++u) {
        if (arena.owner(u) == player && keep[u].size() > 1) {
            owned.push_back(u);
            count *= keep[u].size();
            if (count > limits.max_memoryless) throw ResourceError("positional strategy search exceeds guard");
        }
    }
    std::vector<std::size_t> digit(owned.size(), 0);
    while (true) {
        std::vector<int> pick = first;
        for (std::size_t i = 0; i < owned.size(); ++i) pick[owned[i]] = keep[owned[i]][digit[i]];
        MealyStrategy s = MealyStrategy::memoryless_from(arena, player, pick);
        if (guarantees(arena, s, value)) return s;
        std::size_t i = 0;
        while (i < owned.size() && ++digit[i] == keep[owned[i]].size()) digit[i++] = 0;
        if (i == owned.size()) break;
    }
    throw std::logic_error("no positional strategy realises the computed values");
}

}  // namespace

ZsValueTable zs_value(const Arena& arena, const Limits& limits) {
    const int n = arena.num_vertices();
    // Scale dimension 0 to integers.
    Integer scale = 1;
    for (const auto& e : arena.edges()) {
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), e.w0.get_den_mpz_t());
    }
    std::vector<Integer> w;
    Integer W = 0;
    for (const auto& e : arena.edges()) {
        Rational s = e.w0 * scale;
        w.push_back(s.get_num());
        if (abs(s.get_num()) > W) W = abs(s.get_num());
    }
    Integer rounds = 4 * Integer(n) * n * n * W + 1;
    if (rounds * arena.num_edges() > 400000000) {
        throw ResourceError("value iteration would need " + rounds.get_str() + " rounds");
    }
    const long K = rounds.get_si();

    std::vector<Integer> cur(n, 0), next(n);
    std::vector<int> greedy(n, -1);
    for (long k = 1; k <= K; ++k) {
        for (int u = 0; u < n; ++u) {
            bool max = arena.owner(u) == 0;
            bool set = false;
            for (int e : arena.out_edges(u)) {
                Integer cand = w[e] + cur[arena.edge(e).dst];
                if (!set || (max ? cand > next[u] : cand < next[u])) {
                    next[u] = cand;
                    greedy[u] = e;
                    set = true;
                }
            }
        }
        std::swap(cur, next);
    }
    ZsValueTable out;
    Rational radius = Rational(2 * Integer(n) * W, Integer(K));
    radius.canonicalize();
    for (int u = 0; u < n; ++u) {
        Rational a(cur[u], Integer(K));
        a.canonicalize();
        out.value.push_back(W == 0 ? Rational(0) : snap(a, radius, n) / Rational(scale));
    }
    out.optimal0 = extract(arena, 0, out.value, greedy, limits);
    out.optimal1 = extract(arena, 1, out.value, greedy, limits);
    return out;
}

Rational positional_value(const Arena& arena, const MealyStrategy& sigma0, int v) {
    return karp_min_mean(fix_memoryless(arena, sigma0), 0, v);
}

ZsEmbeddingReport zs_embedding_check(const Arena& arena0, int v, const Rational& c, const Rational& eps,
                                     const Limits& limits) {
    std::vector<Rational> w0, w1;
    for (const auto& e : arena0.edges()) {
        w0.push_back(e.w0);
        w1.push_back(0);
    }
    Arena bi = arena0.with_weights(w0, w1);
    ZsEmbeddingReport r;
    r.zs = zs_value(bi, limits).value[v];
    r.asv_eps = asv_epsilon(bi, v, eps, limits).value;
    r.zs_above = r.zs > c;
    r.asv_above = r.asv_eps > ExtRational(c);
    r.agree = r.zs_above == r.asv_above;
    return r;
}

ZsRobustnessReport zs_robustness_check(const Arena& arena, const MealyStrategy& sigma0, int v, const Rational& delta,
                                       int samples, std::uint64_t seed, int granularity) {
    ZsRobustnessReport r;
    r.base_value = positional_value(arena, sigma0, v);
    Rational floor_value = r.base_value - delta;
    for (int i = 0; i < samples; ++i) {
        std::uint64_t s = seed + static_cast<std::uint64_t>(i);
        PerturbedSample h = perturb_game(arena, delta, s, granularity);
        Rational val = positional_value(h.arena, sigma0, v);
        Rational margin = val - floor_value;
        if (i == 0 || margin < r.min_margin) r.min_margin = margin;
        if (margin <= 0) ++r.violations;
        r.seeds.push_back(s);
        r.sample_values.push_back(val);
    }
    return r;
}

}  // namespace asv
