#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "asv/arena.hpp"
#include "asv/errors.hpp"
#include "asv/geometry.hpp"
#include "asv/graph.hpp"
#include "asv/strategy.hpp"

namespace asv {

// "Is Player 1 able to force MP0 <= c and MP1 > d - eps (or MP1 >= d - eps when
// strict_second is false) from `vertex`?"
struct BadnessQuery {
    int vertex = 0;
    Rational c;
    Rational d;
    Rational eps;
    bool strict_second = true;
};

// Normalised flow LP over the edges of `scc` in a one-player arena:
// conservation, chi >= 0, sum chi = 1, sum chi*w0 <= c, sum chi*w1 (>|>=) d - eps.
bool multicycle_feasible(const Arena& arena1p, const SccRecord& scc, const BadnessQuery& q);

struct BadnessResult {
    bool bad = false;
    // When not bad: a memoryless Player-0 strategy under which no SCC reachable
    // from the vertex admits the bad payoff mix (the punishing strategy).
    std::optional<MealyStrategy> punishing;
    std::size_t strategies_checked = 0;
};

BadnessResult is_bad_vertex(const Arena& arena, const BadnessQuery& q, const Limits& limits = {});

// How eps enters Lambda: a fixed positive rational (MP1 > d - eps), the closed
// variant (MP1 >= d), or a free variable `eps` (MP1 > d - eps).
struct EpsSpec {
    enum class Kind { Fixed, Closed, Symbolic };
    Kind kind = Kind::Fixed;
    Rational value;

    static EpsSpec fixed(const Rational& eps);
    static EpsSpec closed() { return {Kind::Closed, 0}; }
    static EpsSpec symbolic() { return {Kind::Symbolic, 0}; }
    std::vector<Var> lambda_vars() const;
};

// Caches per-SCC relaxations and per-vertex regions for one arena.
class LambdaOracle {
public:
    LambdaOracle(const Arena& arena, EpsSpec eps, Limits limits = {});

    // Lambda(v) as a region over {c, d} (plus eps when symbolic).
    const Region& region(int v);
    const EpsSpec& eps() const { return eps_; }

private:
    const Region& scc_relaxation(const Arena& restricted, const std::vector<int>& kept, const SccRecord& scc);

    const Arena& arena_;
    EpsSpec eps_;
    Limits limits_;
    std::map<std::vector<int>, Region> by_scc_;
    std::map<int, Region> by_vertex_;
};

Region lambda_region(const Arena& arena, int v, const EpsSpec& eps, const Limits& limits = {});

}  // namespace asv
