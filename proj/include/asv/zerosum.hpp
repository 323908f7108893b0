#pragma once

#include <cstdint>
#include <vector>

#include "asv/arena.hpp"
#include "asv/errors.hpp"
#include "asv/strategy.hpp"

namespace asv {

// Zero-sum mean-payoff game on dimension 0: Player 0 maximises, Player 1 minimises.
struct ZsValueTable {
    std::vector<Rational> value;
    MealyStrategy optimal0;
    MealyStrategy optimal1;
};

// Value iteration for 4|V|^3 W + 1 rounds, then each v_k/k is snapped to the
// unique rational with denominator <= |V| in the Zwick-Paterson error window.
ZsValueTable zs_value(const Arena& arena, const Limits& limits = {});

// Val_G(sigma0)(v): Player 1's best (minimal) mean payoff against a positional sigma0.
Rational positional_value(const Arena& arena, const MealyStrategy& sigma0, int v);

struct ZsEmbeddingReport {
    Rational zs;
    ExtRational asv_eps;
    bool zs_above = false;
    bool asv_above = false;
    bool agree = false;
};

// Adds w1 = 0 and compares asv_epsilon(v, eps) > c with zs_value(v) > c.
ZsEmbeddingReport zs_embedding_check(const Arena& arena0, int v, const Rational& c, const Rational& eps,
                                     const Limits& limits = {});

struct ZsRobustnessReport {
    Rational base_value;                 // Val_G(sigma0)(v)
    std::vector<std::uint64_t> seeds;
    std::vector<Rational> sample_values;  // Val_H(sigma0)(v) per sample
    Rational min_margin;                 // min over samples of value - (base - delta)
    int violations = 0;
};

ZsRobustnessReport zs_robustness_check(const Arena& arena, const MealyStrategy& sigma0, int v,
                                       const Rational& delta, int samples, std::uint64_t seed,
                                       int granularity = 8);

}  // namespace asv
