#include "asv/perturb.hpp"

#include <random>

#include "asv/errors.hpp"

namespace asv {

PerturbedSample perturb_game(const Arena& arena, const Rational& delta, std::uint64_t seed, int granularity) {
    if (delta <= 0) throw DomainError("perturbation radius delta must be > 0");
    if (granularity < 1) throw DomainError("granularity must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(-granularity + 1, granularity - 1);
    std::vector<Rational> w0, w1;
    Rational step = delta / granularity;
    for (const auto& e : arena.edges()) {
        int j0 = pick(rng);
        int j1 = pick(rng);
        w0.push_back(e.w0 + step * j0);
        w1.push_back(e.w1 + step * j1);
    }
    return {arena.with_weights(w0, w1), delta, seed, granularity};
}

bool within_band(const Arena& base, const Arena& sample, const Rational& delta) {
    if (base.num_edges() != sample.num_edges() || base.num_vertices() != sample.num_vertices()) return false;
    for (int e = 0; e < base.num_edges(); ++e) {
        const Edge& a = base.edge(e);
        const Edge& b = sample.edge(e);
        if (a.src != b.src || a.dst != b.dst) return false;
        if (abs_of(a.w0 - b.w0) >= delta || abs_of(a.w1 - b.w1) >= delta) return false;
    }
    return true;
}

}  // namespace asv
