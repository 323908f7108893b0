#pragma once

#include <cstdint>
#include <vector>

#include "asv/evaluate.hpp"

namespace asv {

struct RobustSample {
    std::uint64_t seed = 0;
    Rational value;   // strategy value in the perturbed game
    Rational margin;  // value minus the bound it must exceed
    bool ok = true;
};

// Two unconditional checks for a fixed Leader strategy sigma0:
//  * combined: L = value in G with tolerance 2 delta + eps. For every sampled
//    H within delta of G, the value in H with tolerance eps must exceed
//    L - margin - delta (the bound holds for every threshold below L).
//  * exact responses: with tolerance 2 eps in G as the base, every H within
//    eps of G must give a best-response value (no tolerance) strictly above
//    base - eps.
struct RobustnessReport {
    Rational eps, delta, margin;
    Rational combined_base;     // L
    Rational exact_base;        // value in G with tolerance 2 eps
    std::vector<RobustSample> combined;
    std::vector<RobustSample> exact;
    Rational min_combined_margin;
    Rational min_exact_margin;
    int violations = 0;
};

RobustnessReport robustness_harness(const Arena& arena, const MealyStrategy& sigma0, int v, const Rational& eps,
                                    const Rational& delta, int samples, std::uint64_t seed,
                                    const Rational& margin = Rational(1, 1000), int granularity = 8,
                                    const Limits& limits = {});

}  // namespace asv
