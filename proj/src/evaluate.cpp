#include "asv/evaluate.hpp"

#include "asv/geometry.hpp"
#include "asv/graph.hpp"

namespace asv {

StrategyValue strategy_value(const Arena& arena, const MealyStrategy& sigma0, int v, const EpsSpec& eps,
                             const Limits& limits) {
    if (eps.kind == EpsSpec::Kind::Symbolic) throw DomainError("strategy_value needs a concrete eps");
    if (sigma0.player != 0) throw DomainError("strategy_value expects a Player-0 strategy");
    Product prod = product_with_strategy(arena, sigma0, v);
    auto sccs = reachable_nontrivial_sccs(prod.arena, prod.initial);

    std::vector<Region> hulls;
    StrategyValue out;
    bool first = true;
    for (const auto& scc : sccs) {
        std::vector<Point2> pts;
        for (const auto& c : enumerate_simple_cycles(prod.arena, scc, limits.max_cycles)) {
            pts.push_back({c.mp0, c.mp1});
            if (first || c.mp1 > out.d_star) out.d_star = c.mp1;
            first = false;
        }
        hulls.push_back(fmin_closure(pts));
    }

    bool have = false;
    for (auto& h : hulls) {
        for (auto& cell : h.cells) {
            if (eps.kind == EpsSpec::Kind::Closed) {
                cell.cons.push_back(LinearConstraint({{Var::Y, 1}}, Rel::Ge, out.d_star));
            } else {
                cell.cons.push_back(LinearConstraint({{Var::Y, 1}}, Rel::Gt, out.d_star - eps.value));
            }
        }
        SupResult r = lp_inf(h, Var::X);
        if (r.cell < 0) continue;
        const Rational& x = r.value.value();
        if (!have || x < out.inf_mp0) {
            out.inf_mp0 = x;
            out.attained = r.attained;
            have = true;
        } else if (x == out.inf_mp0) {
            out.attained = out.attained || r.attained;
        }
    }
    if (!have) throw std::logic_error("no admissible best response found");
    return out;
}

MemorylessValue asv_ml(const Arena& arena, int v, const EpsSpec& eps, const Limits& limits) {
    auto strategies = enumerate_memoryless(arena, 0, reachable_from(arena, v), limits.max_memoryless);
    MemorylessValue out;
    out.strategies = strategies.size();
    bool have = false;
    for (auto& s : strategies) {
        StrategyValue sv = strategy_value(arena, s, v, eps, limits);
        if (!have || sv.inf_mp0 > out.value || (sv.inf_mp0 == out.value && sv.attained && !out.attained)) {
            out.value = sv.inf_mp0;
            out.attained = sv.attained;
            out.best = s;
            have = true;
        }
    }
    return out;
}

}  // namespace asv
