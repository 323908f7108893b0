#pragma once

#include "asv/arena.hpp"
#include "asv/errors.hpp"
#include "asv/lambda.hpp"
#include "asv/strategy.hpp"

namespace asv {

// Value of a fixed finite-memory Leader strategy against the Follower's
// eps-best responses (or exact best responses with EpsSpec::closed()).
struct StrategyValue {
    Rational inf_mp0;
    bool attained = false;
    Rational d_star;  // best MP1 the Follower can secure against sigma0
};

StrategyValue strategy_value(const Arena& arena, const MealyStrategy& sigma0, int v, const EpsSpec& eps,
                             const Limits& limits = {});

struct MemorylessValue {
    Rational value;
    bool attained = false;
    MealyStrategy best;
    std::size_t strategies = 0;
};

// Best value over memoryless Leader strategies (only choices at vertices
// reachable from v are varied).
MemorylessValue asv_ml(const Arena& arena, int v, const EpsSpec& eps, const Limits& limits = {});

}  // namespace asv
