#include "asv/lambda.hpp"

#include <algorithm>
#include <set>

#include "asv/simplex.hpp"

namespace asv {

namespace {

void validate(const BadnessQuery& q) {
    if (q.strict_second && q.eps <= 0) throw DomainError("eps must be > 0 for the strict (MP1 > d - eps) variant");
    if (q.eps < 0) throw DomainError("eps must be >= 0");
}

// Base-edge indices of the edges running inside `scc` of a restricted arena.
std::vector<int> scc_key(const Arena& restricted, const std::vector<int>& kept, const SccRecord& scc) {
    std::vector<bool> in(restricted.num_vertices(), false);
    for (int v : scc.vertices) in[v] = true;
    std::vector<int> key;
    for (int e = 0; e < restricted.num_edges(); ++e) {
        const Edge& ed = restricted.edge(e);
        if (in[ed.src] && in[ed.dst]) key.push_back(kept[e]);
    }
    return key;
}

}  // namespace

bool multicycle_feasible(const Arena& arena1p, const SccRecord& scc, const BadnessQuery& q) {
    validate(q);
    if (scc.is_trivial) throw DomainError("multicycle LP needs a non-trivial SCC");
    std::vector<int> local(arena1p.num_vertices(), -1);
    for (std::size_t i = 0; i < scc.vertices.size(); ++i) local[scc.vertices[i]] = static_cast<int>(i);
    std::vector<int> edges;
    for (int e = 0; e < arena1p.num_edges(); ++e) {
        if (local[arena1p.edge(e).src] >= 0 && local[arena1p.edge(e).dst] >= 0) edges.push_back(e);
    }
    const int n = static_cast<int>(edges.size());
    LpProblem lp;
    lp.num_vars = n;
    for (std::size_t v = 0; v < scc.vertices.size(); ++v) {
        std::vector<Rational> row(n, 0);
        for (int i = 0; i < n; ++i) {
            const Edge& ed = arena1p.edge(edges[i]);
            if (local[ed.dst] == static_cast<int>(v)) row[i] += 1;
            if (local[ed.src] == static_cast<int>(v)) row[i] -= 1;
        }
        lp.rows.push_back(std::move(row));
        lp.rel.push_back(Rel::Eq);
        lp.rhs.push_back(0);
    }
    lp.rows.emplace_back(n, Rational(1));
    lp.rel.push_back(Rel::Eq);
    lp.rhs.push_back(1);
    std::vector<Rational> w0row(n), w1(n);
    for (int i = 0; i < n; ++i) {
        w0row[i] = arena1p.edge(edges[i]).w0;
        w1[i] = arena1p.edge(edges[i]).w1;
    }
    lp.rows.push_back(w0row);
    lp.rel.push_back(Rel::Le);
    lp.rhs.push_back(q.c);
    lp.objective = w1;
    LpSolution sol = simplex_maximize(lp);
    if (sol.status != LpSolution::Status::Optimal) return false;
    Rational bound = q.d - q.eps;
    return q.strict_second ? sol.value > bound : sol.value >= bound;
}

BadnessResult is_bad_vertex(const Arena& arena, const BadnessQuery& q, const Limits& limits) {
    validate(q);
    BadnessResult out;
    auto relevant = reachable_from(arena, q.vertex);
    for (const auto& sigma : enumerate_memoryless(arena, 0, relevant, limits.max_memoryless)) {
        ++out.strategies_checked;
        Arena restricted = fix_memoryless(arena, sigma);
        bool some_feasible = false;
        for (const auto& scc : reachable_nontrivial_sccs(restricted, q.vertex)) {
            if (multicycle_feasible(restricted, scc, q)) {
                some_feasible = true;
                break;
            }
        }
        if (!some_feasible) {
            out.bad = false;
            out.punishing = sigma;
            return out;
        }
    }
    out.bad = true;
    return out;
}

EpsSpec EpsSpec::fixed(const Rational& eps) {
    if (eps <= 0) throw DomainError("eps must be > 0");
    return {Kind::Fixed, eps};
}

std::vector<Var> EpsSpec::lambda_vars() const {
    if (kind == Kind::Symbolic) return {Var::C, Var::D, Var::Eps};
    return {Var::C, Var::D};
}

LambdaOracle::LambdaOracle(const Arena& arena, EpsSpec eps, Limits limits)
    : arena_(arena), eps_(std::move(eps)), limits_(limits) {}

const Region& LambdaOracle::scc_relaxation(const Arena& restricted, const std::vector<int>& kept,
                                           const SccRecord& scc) {
    auto key = scc_key(restricted, kept, scc);
    auto it = by_scc_.find(key);
    if (it != by_scc_.end()) return it->second;

    std::vector<Point2> pts;
    for (const auto& cyc : enumerate_simple_cycles(restricted, scc, limits_.max_cycles)) pts.push_back({cyc.mp0, cyc.mp1});
    // {(c,d) : exists (x,y) in F_min(CH) with x <= c and y > d - eps}.
    std::vector<Var> vars = eps_.lambda_vars();
    vars.push_back(Var::X);
    vars.push_back(Var::Y);
    Region hull = lift(fmin_closure(pts), vars);
    Cell cell = hull.cells.front();
    cell.cons.push_back(LinearConstraint({{Var::X, 1}, {Var::C, -1}}, Rel::Le, 0));
    switch (eps_.kind) {
        case EpsSpec::Kind::Fixed:
            cell.cons.push_back(LinearConstraint({{Var::Y, 1}, {Var::D, -1}}, Rel::Gt, -eps_.value));
            break;
        case EpsSpec::Kind::Closed:
            cell.cons.push_back(LinearConstraint({{Var::Y, 1}, {Var::D, -1}}, Rel::Ge, 0));
            break;
        case EpsSpec::Kind::Symbolic:
            cell.cons.push_back(LinearConstraint({{Var::Y, 1}, {Var::D, -1}, {Var::Eps, 1}}, Rel::Gt, 0));
            break;
    }
    Region r = project(project(Region::single(cell), Var::X), Var::Y);
    return by_scc_.emplace(std::move(key), std::move(r)).first->second;
}

const Region& LambdaOracle::region(int v) {
    auto it = by_vertex_.find(v);
    if (it != by_vertex_.end()) return it->second;

    // Lambda(v) = intersection over memoryless sigma0 of the union over SCCs
    // reachable under sigma0. Unions are keyed by their SCC sets; a union whose
    // key set contains another's is redundant in the intersection.
    std::set<std::vector<std::vector<int>>> families;
    std::map<std::vector<int>, Region> scc_regions;
    auto relevant = reachable_from(arena_, v);
    for (const auto& sigma : enumerate_memoryless(arena_, 0, relevant, limits_.max_memoryless)) {
        std::vector<int> kept;
        Arena restricted = fix_memoryless(arena_, sigma, &kept);
        std::vector<std::vector<int>> family;
        for (const auto& scc : reachable_nontrivial_sccs(restricted, v)) {
            auto key = scc_key(restricted, kept, scc);
            if (!scc_regions.count(key)) scc_regions.emplace(key, scc_relaxation(restricted, kept, scc));
            family.push_back(std::move(key));
        }
        std::sort(family.begin(), family.end());
        families.insert(std::move(family));
    }
    std::vector<std::vector<std::vector<int>>> minimal;
    for (const auto& f : families) {
        bool dominated = false;
        for (const auto& g : families) {
            if (&f == &g || g.size() >= f.size()) continue;
            if (std::includes(f.begin(), f.end(), g.begin(), g.end())) dominated = true;
        }
        if (!dominated) minimal.push_back(f);
    }
    std::sort(minimal.begin(), minimal.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });

    Region acc = Region::universe(eps_.lambda_vars());
    for (const auto& family : minimal) {
        Region u = Region::empty(eps_.lambda_vars());
        for (const auto& key : family) u.cells.insert(u.cells.end(), scc_regions.at(key).cells.begin(), scc_regions.at(key).cells.end());
        acc = region_intersect(acc, simplify_region(u));
        if (acc.cells.empty()) break;
    }
    return by_vertex_.emplace(v, std::move(acc)).first->second;
}

Region lambda_region(const Arena& arena, int v, const EpsSpec& eps, const Limits& limits) {
    LambdaOracle oracle(arena, eps, limits);
    return oracle.region(v);
}

}  // namespace asv
