#include "asv/robust.hpp"

#include <random>

#include "asv/perturb.hpp"

namespace asv {

RobustnessReport robustness_harness(const Arena& arena, const MealyStrategy& sigma0, int v, const Rational& eps,
                                    const Rational& delta, int samples, std::uint64_t seed, const Rational& margin,
                                    int granularity, const Limits& limits) {
    if (eps <= 0 || delta <= 0) throw DomainError("eps and delta must be > 0");
    if (margin <= 0) throw DomainError("margin must be > 0");
    RobustnessReport r;
    r.eps = eps;
    r.delta = delta;
    r.margin = margin;
    r.combined_base = strategy_value(arena, sigma0, v, EpsSpec::fixed(2 * delta + eps), limits).inf_mp0;
    r.exact_base = strategy_value(arena, sigma0, v, EpsSpec::fixed(2 * eps), limits).inf_mp0;

    std::mt19937_64 seeds(seed);
    const Rational combined_bound = r.combined_base - margin - delta;
    const Rational exact_bound = r.exact_base - eps;
    for (int i = 0; i < samples; ++i) {
        RobustSample a;
        a.seed = seeds();
        PerturbedSample h = perturb_game(arena, delta, a.seed, granularity);
        a.value = strategy_value(h.arena, sigma0, v, EpsSpec::fixed(eps), limits).inf_mp0;
        a.margin = a.value - combined_bound;
        a.ok = a.margin > 0;
        if (i == 0 || a.margin < r.min_combined_margin) r.min_combined_margin = a.margin;
        r.violations += a.ok ? 0 : 1;
        r.combined.push_back(a);

        RobustSample b;
        b.seed = seeds();
        PerturbedSample g = perturb_game(arena, eps, b.seed, granularity);
        b.value = strategy_value(g.arena, sigma0, v, EpsSpec::closed(), limits).inf_mp0;
        b.margin = b.value - exact_bound;
        b.ok = b.margin > 0;
        if (i == 0 || b.margin < r.min_exact_margin) r.min_exact_margin = b.margin;
        r.violations += b.ok ? 0 : 1;
        r.exact.push_back(b);
    }
    return r;
}

}  // namespace asv
