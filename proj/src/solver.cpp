#include "asv/solver.hpp"

#include <algorithm>

namespace asv {

namespace {

std::vector<Point2> cycle_points(const Arena& arena, const SccRecord& scc, const Limits& limits) {
    std::vector<Point2> pts;
    for (const auto& c : enumerate_simple_cycles(arena, scc, limits.max_cycles)) pts.push_back({c.mp0, c.mp1});
    return pts;
}

// rho^S: x > c, Phi_S(x, y), and (c, y) outside Psi_S.
Region rho_region(const Region& phi, const Region& psi, const EpsSpec& eps) {
    std::vector<Var> extra{Var::C};
    if (eps.kind == EpsSpec::Kind::Symbolic) extra.push_back(Var::Eps);
    Region base = lift(phi, extra);
    for (auto& cell : base.cells) {
        cell.cons.push_back(LinearConstraint({{Var::X, 1}, {Var::C, -1}}, Rel::Gt, 0));
        if (eps.kind == EpsSpec::Kind::Symbolic) cell.cons.push_back(LinearConstraint({{Var::Eps, 1}}, Rel::Gt, 0));
    }
    Region bad = lift(rename_var(psi, Var::D, Var::Y), {Var::X});
    return region_difference(simplify_region(base), bad);
}

}  // namespace

Region phi_region(const ExtendedArena& ext, const SccRecord& scc, const Limits& limits) {
    return fmin_closure(cycle_points(ext.arena, scc, limits));
}

Region psi_region(const ExtendedArena& ext, const SccRecord& scc, LambdaOracle& oracle) {
    Region acc = Region::empty(oracle.eps().lambda_vars());
    for (int u : ext.visited[scc.vertices.front()]) acc.cells.insert(acc.cells.end(), oracle.region(u).cells.begin(), oracle.region(u).cells.end());
    return simplify_region(acc);
}

AsvResult solve_asv(const Arena& arena, int v, const EpsSpec& eps, const Limits& limits) {
    if (eps.kind == EpsSpec::Kind::Symbolic) throw DomainError("solve_asv needs a concrete eps; use max_epsilon");
    AsvResult out;
    out.ext = build_extended_game(arena, v, limits);
    LambdaOracle oracle(arena, eps, limits);
    auto sccs = tarjan_scc(out.ext.arena);
    // Everything in the extended game is reachable from the root by construction.
    for (std::size_t i = 0; i < sccs.size(); ++i) {
        if (sccs[i].is_trivial) continue;
        SccTrace t;
        t.scc = static_cast<int>(i);
        t.ext_vertices = sccs[i].vertices;
        t.visited = out.ext.visited[sccs[i].vertices.front()];
        t.cycle_points = cycle_points(out.ext.arena, sccs[i], limits);
        t.phi = fmin_closure(t.cycle_points);
        t.psi = psi_region(out.ext, sccs[i], oracle);
        t.rho = rho_region(t.phi, t.psi, eps);
        t.sup = lp_sup(t.rho, Var::C);
        out.trace.push_back(std::move(t));
    }
    for (std::size_t i = 0; i < out.trace.size(); ++i) {
        const auto& s = out.trace[i].sup;
        if (out.achieving_scc < 0 || s.value > out.value || (s.value == out.value && s.attained && !out.attained)) {
            out.value = s.value;
            out.attained = s.attained;
            out.achieving_scc = static_cast<int>(i);
        }
    }
    return out;
}

AsvResult asv_epsilon(const Arena& arena, int v, const Rational& eps, const Limits& limits) {
    return solve_asv(arena, v, EpsSpec::fixed(eps), limits);
}

AsvResult asv_value(const Arena& arena, int v, const Limits& limits) {
    return solve_asv(arena, v, EpsSpec::closed(), limits);
}

MaxEpsResult max_epsilon(const Arena& arena, int v, const Rational& c, const Limits& limits) {
    MaxEpsResult out;
    ExtendedArena ext = build_extended_game(arena, v, limits);
    LambdaOracle oracle(arena, EpsSpec::symbolic(), limits);
    auto sccs = tarjan_scc(ext.arena);
    for (std::size_t i = 0; i < sccs.size(); ++i) {
        if (sccs[i].is_trivial) continue;
        Region phi = phi_region(ext, sccs[i], limits);
        Region rho = rho_region(phi, psi_region(ext, sccs[i], oracle), EpsSpec::symbolic());
        SupResult s = lp_sup(substitute(rho, Var::C, c), Var::Eps);
        if (s.cell < 0) continue;
        if (out.achieving_scc < 0 || s.value > out.sup || (s.value == out.sup && s.attained && !out.attained)) {
            out.sup = s.value;
            out.attained = s.attained;
            out.achieving_scc = static_cast<int>(i);
        }
    }
    return out;
}

EpsBracket max_epsilon_bisect(const Arena& arena, int v, const Rational& c, const Rational& cap, int rounds,
                              const Limits& limits) {
    EpsBracket b;
    auto above = [&](const Rational& e) {
        ++b.evaluations;
        return asv_epsilon(arena, v, e, limits).value > ExtRational(c);
    };
    b.lo = 0;
    b.hi = cap;
    b.hi_found = !above(cap);
    if (!b.hi_found) {
        b.lo = cap;
        return b;
    }
    for (int i = 0; i < rounds; ++i) {
        Rational mid = (b.lo + b.hi) / 2;
        if (above(mid)) b.lo = mid;
        else b.hi = mid;
    }
    return b;
}

}  // namespace asv
