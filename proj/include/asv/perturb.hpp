#pragma once

#include <cstdint>

#include "asv/arena.hpp"

namespace asv {

// A game H in G^{±delta}: same graph, each weight moved by strictly less than delta.
struct PerturbedSample {
    Arena arena;
    Rational delta;
    std::uint64_t seed = 0;
    int granularity = 1;
};

// Each weight becomes w + (j/granularity)*delta with j uniform in
// {-granularity+1, ..., granularity-1}. Deterministic given the seed.
PerturbedSample perturb_game(const Arena& arena, const Rational& delta, std::uint64_t seed,
                             int granularity);

// True when every weight of `sample` lies in the open delta band around `base`.
bool within_band(const Arena& base, const Arena& sample, const Rational& delta);

}  // namespace asv
