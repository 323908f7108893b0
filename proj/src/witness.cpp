#include "asv/witness.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "asv/graph.hpp"
#include "asv/simplex.hpp"

namespace asv {

namespace {

// Shortest path by edges inside `allowed`, exploring edges in index order so
// the result is deterministic. Empty when from == to.
std::vector<int> bfs_path(const Arena& arena, int from, int to, const std::vector<bool>& allowed) {
    if (from == to) return {};
    std::vector<int> via(arena.num_vertices(), -1);
    std::vector<bool> seen(arena.num_vertices(), false);
    std::deque<int> queue{from};
    seen[from] = true;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int e : arena.out_edges(u)) {
            int w = arena.edge(e).dst;
            if (seen[w] || !allowed[w]) continue;
            seen[w] = true;
            via[w] = e;
            if (w == to) {
                std::vector<int> path;
                for (int x = to; x != from; x = arena.edge(via[x]).src) path.push_back(via[x]);
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.push_back(w);
        }
    }
    throw std::logic_error("no path between certificate endpoints");
}

int first_vertex(const Arena& arena, const std::vector<int>& cycle) { return arena.edge(cycle.front()).src; }

std::pair<Rational, Rational> totals(const Arena& arena, const std::vector<int>& edges) {
    Rational a = 0, b = 0;
    for (int e : edges) {
        a += arena.edge(e).w0;
        b += arena.edge(e).w1;
    }
    return {a, b};
}

BadnessQuery query(const WitnessCertificate& cert, int u, const Rational& c) {
    bool strict = cert.eps.kind != EpsSpec::Kind::Closed;
    return BadnessQuery{u, c, cert.d, strict ? cert.eps.value : Rational(0), strict};
}

std::set<int> certificate_vertices(const Arena& arena, const WitnessCertificate& cert) {
    std::set<int> out{cert.vertex};
    for (const auto* part : {&cert.pi1, &cert.pi2, &cert.pi3, &cert.l1, &cert.l2}) {
        for (int e : *part) {
            out.insert(arena.edge(e).src);
            out.insert(arena.edge(e).dst);
        }
    }
    return out;
}

// Smallest cycle (by length, then edge list) realising a coordinate.
const std::vector<int>& pick_cycle(const std::vector<std::pair<Point2, std::vector<int>>>& cycles, const Point2& p) {
    const std::vector<int>* best = nullptr;
    for (const auto& [pt, edges] : cycles) {
        if (!(pt == p)) continue;
        if (!best || edges.size() < best->size() || (edges.size() == best->size() && edges < *best)) best = &edges;
    }
    if (!best) throw std::logic_error("hull vertex without a cycle");
    return *best;
}

WitnessCertificate extract(const Arena& arena, int v, const Rational& c, const EpsSpec& eps, const AsvResult& res,
                           const Limits& limits) {
    const SccTrace& t = res.trace.at(res.achieving_scc);
    WitnessCertificate cert;
    cert.vertex = v;
    cert.c = c;
    cert.eps = eps;
    cert.c_slack = res.value.finite() ? Rational((c + res.value.value()) / 2) : Rational(c + 1);

    // A point of rho at the slack threshold; rho is downward closed in c.
    Region at = substitute(t.rho, Var::C, cert.c_slack);
    std::optional<Point> p;
    for (const auto& cell : at.cells) {
        if ((p = sample_point(cell))) break;
    }
    if (!p) throw std::logic_error("rho region empty below its supremum");
    const Rational& px = (*p)[static_cast<int>(Var::X)];
    const Rational& py = (*p)[static_cast<int>(Var::Y)];

    // Cycle coordinates of the SCC, edges mapped back to the base arena.
    SccRecord scc{t.scc, t.ext_vertices, false};
    std::vector<std::pair<Point2, std::vector<int>>> cycles;
    for (const auto& cyc : enumerate_simple_cycles(res.ext.arena, scc, limits.max_cycles)) {
        std::vector<int> base;
        for (int e : cyc.edges) base.push_back(res.ext.base_edge[e]);
        cycles.push_back({{cyc.mp0, cyc.mp1}, std::move(base)});
    }

    // Hull point q >= p with the largest x + y; it lies on the hull boundary.
    LpProblem lp;
    lp.num_vars = static_cast<int>(cycles.size());
    std::vector<Rational> ones(lp.num_vars, 1), xs, ys;
    for (const auto& cyc : cycles) {
        xs.push_back(cyc.first.x);
        ys.push_back(cyc.first.y);
        lp.objective.push_back(cyc.first.x + cyc.first.y);
    }
    lp.rows = {ones, xs, ys};
    lp.rel = {Rel::Eq, Rel::Ge, Rel::Ge};
    lp.rhs = {1, px, py};
    LpSolution sol = simplex_maximize(lp);
    if (sol.status != LpSolution::Status::Optimal) throw std::logic_error("no cycle mix dominates the rho point");
    Point2 q{0, 0};
    for (int i = 0; i < lp.num_vars; ++i) {
        q.x += sol.x[i] * xs[i];
        q.y += sol.x[i] * ys[i];
    }

    std::vector<Point2> pts;
    for (const auto& cyc : cycles) pts.push_back(cyc.first);
    Polygon2D hull = convex_hull_2d(pts);
    const auto& hv = hull.vertices;
    bool found = false;
    Point2 a = hv.front(), b = hv.front();
    for (std::size_t i = 0; i < hv.size() && !found; ++i) {
        const Point2& s = hv[i];
        const Point2& e = hv[(i + 1) % hv.size()];
        Rational cross = (e.x - s.x) * (q.y - s.y) - (e.y - s.y) * (q.x - s.x);
        bool inside_box = std::min(s.x, e.x) <= q.x && q.x <= std::max(s.x, e.x) && std::min(s.y, e.y) <= q.y &&
                          q.y <= std::max(s.y, e.y);
        if (cross == 0 && inside_box) {
            a = s;
            b = e;
            found = true;
        }
    }
    if (!found) throw std::logic_error("optimal cycle mix is not on the hull boundary");
    if (a == b || q == a) {
        cert.alpha = 1;
    } else if (q == b) {
        a = b;
        cert.alpha = 1;
    } else {
        cert.alpha = a.x != b.x ? (q.x - b.x) / (a.x - b.x) : (q.y - b.y) / (a.y - b.y);
    }
    cert.beta = 1 - cert.alpha;
    cert.l1 = pick_cycle(cycles, a);
    cert.l2 = cert.beta == 0 ? cert.l1 : pick_cycle(cycles, b);
    cert.c_prime = q.x;
    cert.d = q.y;

    std::vector<bool> in_visited(arena.num_vertices(), false), in_scc(arena.num_vertices(), false);
    for (int u : t.visited) in_visited[u] = true;
    for (int u : t.ext_vertices) in_scc[res.ext.base_vertex[u]] = true;
    cert.pi1 = bfs_path(arena, v, first_vertex(arena, cert.l1), in_visited);
    if (cert.l1 != cert.l2) {
        cert.pi2 = bfs_path(arena, first_vertex(arena, cert.l1), first_vertex(arena, cert.l2), in_scc);
        cert.pi3 = bfs_path(arena, first_vertex(arena, cert.l2), first_vertex(arena, cert.l1), in_scc);
    }

    for (int u : certificate_vertices(arena, cert)) {
        BadnessResult r = is_bad_vertex(arena, query(cert, u, cert.c_slack), limits);
        if (r.bad) throw std::logic_error("certificate vertex '" + arena.name(u) + "' is bad");
        cert.punishing.emplace(u, *r.punishing);
    }
    return cert;
}

// Checks a path of edges from `from` to `to` visiting no vertex twice.
bool simple_path(const Arena& arena, const std::vector<int>& edges, int from, int to, bool closed) {
    std::set<int> seen{from};
    int at = from;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        int e = edges[i];
        if (e < 0 || e >= arena.num_edges() || arena.edge(e).src != at) return false;
        at = arena.edge(e).dst;
        bool last = i + 1 == edges.size();
        if (!(closed && last) && !seen.insert(at).second) return false;
    }
    return at == to;
}

}  // namespace

ThresholdResult threshold(const Arena& arena, int v, const Rational& c, const EpsSpec& eps, const Limits& limits) {
    ThresholdResult out;
    out.asv = solve_asv(arena, v, eps, limits);
    out.decision = out.asv.value > ExtRational(c);
    if (!out.decision) return out;
    out.certificate = extract(arena, v, c, eps, out.asv, limits);
    CertificateCheck check = verify_certificate(arena, *out.certificate, limits);
    if (!check.ok) throw std::logic_error("extracted certificate fails verification: " + check.reason);
    return out;
}

CertificateCheck verify_certificate(const Arena& arena, const WitnessCertificate& cert, const Limits& limits) {
    auto fail = [](std::string why) { return CertificateCheck{false, std::move(why)}; };
    if (cert.l1.empty() || cert.l2.empty()) return fail("empty cycle");
    const int f1 = first_vertex(arena, cert.l1);
    const int f2 = first_vertex(arena, cert.l2);
    if (!simple_path(arena, cert.l1, f1, f1, true)) return fail("l1 is not a simple cycle");
    if (!simple_path(arena, cert.l2, f2, f2, true)) return fail("l2 is not a simple cycle");
    if (!simple_path(arena, cert.pi1, cert.vertex, f1, false)) return fail("pi1 does not lead from the vertex to l1");
    if (!simple_path(arena, cert.pi2, f1, f2, false)) return fail("pi2 does not lead from l1 to l2");
    if (!simple_path(arena, cert.pi3, f2, f1, false)) return fail("pi3 does not lead from l2 to l1");

    if (cert.alpha <= 0 || cert.beta < 0 || cert.alpha + cert.beta != 1) return fail("alpha/beta not a convex pair");
    auto [m01, m11] = cycle_mean(arena, cert.l1);
    auto [m02, m12] = cycle_mean(arena, cert.l2);
    if (cert.alpha * m01 + cert.beta * m02 != cert.c_prime) return fail("first payoff identity fails");
    if (cert.alpha * m11 + cert.beta * m12 != cert.d) return fail("second payoff identity fails");
    if (!(cert.c < cert.c_slack && cert.c_slack < cert.c_prime)) return fail("need c < c_slack < c_prime");
    if (cert.eps.kind == EpsSpec::Kind::Symbolic) return fail("certificate needs a concrete eps");

    for (int u : certificate_vertices(arena, cert)) {
        for (const Rational& level : {cert.c, cert.c_slack}) {
            if (is_bad_vertex(arena, query(cert, u, level), limits).bad) {
                return fail("vertex '" + arena.name(u) + "' is bad at c = " + to_string(level));
            }
        }
        auto it = cert.punishing.find(u);
        if (it == cert.punishing.end()) return fail("no punishing strategy for '" + arena.name(u) + "'");
        std::vector<int> kept;
        Arena fixed = fix_memoryless(arena, it->second, &kept);
        for (const auto& scc : reachable_nontrivial_sccs(fixed, u)) {
            if (multicycle_feasible(fixed, scc, query(cert, u, cert.c_slack))) {
                return fail("punishing strategy for '" + arena.name(u) + "' admits a bad mix");
            }
        }
    }
    return {};
}

KTau closed_form_k_tau(const TradeOffData& t) {
    KTau out;
    Rational a = t.alpha / t.len_l1, b = t.beta / t.len_l2;
    Rational x0 = a * t.w0_l1 + b * t.w0_l2, x1 = a * t.w1_l1 + b * t.w1_l2, y = t.alpha + t.beta;
    Rational r0 = x0 - t.c_target * y, r1 = x1 - t.d * y;
    Rational s0 = t.w0_l2 - t.c_target * t.len_l2, s1 = t.w1_l2 - t.d * t.len_l2;
    Rational h0 = t.c_target * t.v - t.z0, h1 = t.d * t.v - t.z1;
    Rational det = r0 * s1 - s0 * r1;
    if (det == 0) return out;
    out.ok = true;
    out.k = (h0 * s1 - s0 * h1) / det;
    out.u = (r0 * h1 - r1 * h0) / det;
    out.tau = b != 0 ? Rational(out.u / b) : Rational(0);
    out.n1 = a * out.k;
    out.n2 = b * out.k + out.u;
    // A zero-length block has no mean; the target is then out of reach.
    if (out.n1 * t.len_l1 + out.n2 * t.len_l2 + t.v == 0) out.ok = false;
    return out;
}

KTau uncorrected_k_tau(const TradeOffData& t) {
    KTau out;
    Rational x0 = t.alpha * t.w0_l1 + t.beta * t.w0_l2, x1 = t.alpha * t.w1_l1 + t.beta * t.w1_l2;
    Rational y = t.alpha * t.len_l1 + t.beta * t.len_l2;
    Rational den = (x0 - t.c_target * y) * (t.w1_l2 - t.d) - (t.d * y - x1);
    if (den == 0 || t.beta == 0 || t.w1_l2 == t.d) return out;
    out.ok = true;
    out.k = ((t.c_target * t.v - t.z0) * (t.w1_l2 - t.d) + (t.c_target - t.w0_l2) * (t.v * t.d - t.z1)) / den;
    out.tau = (t.v * t.d - t.z1) / (t.beta * (t.w1_l2 - t.d)) + (t.d * y - x1) / (t.w1_l2 - t.d) * out.k / t.beta;
    out.u = t.beta * out.tau;
    out.n1 = t.alpha * out.k;
    out.n2 = t.beta * (out.k + out.tau);
    return out;
}

std::pair<Rational, Rational> block_payoffs(const TradeOffData& t, const Rational& n1, const Rational& n2) {
    Rational len = n1 * t.len_l1 + n2 * t.len_l2 + t.v;
    if (len == 0) throw DomainError("block_payoffs: block of length zero");
    return {(n1 * t.w0_l1 + n2 * t.w0_l2 + t.z0) / len, (n1 * t.w1_l1 + n2 * t.w1_l2 + t.z1) / len};
}

RegularWitness build_regular_witness(const Arena& arena, const WitnessCertificate& cert, const Rational& c_target,
                                     std::size_t max_cycle_length) {
    if (!(cert.c < c_target && c_target < cert.c_prime)) throw DomainError("need c < target < c'");
    RegularWitness out;
    out.c_target = c_target;
    auto [m01, m11] = cycle_mean(arena, cert.l1);
    auto [m02, m12] = cycle_mean(arena, cert.l2);

    auto concat = [](std::vector<int> a, const std::vector<int>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };
    if (m01 > cert.c && m11 >= cert.d) {
        out.dominating = true;
        out.lasso = make_lasso(arena, cert.vertex, cert.pi1, cert.l1);
        return out;
    }
    if (m02 > cert.c && m12 >= cert.d) {
        out.dominating = true;
        out.lasso = make_lasso(arena, cert.vertex, concat(cert.pi1, cert.pi2), cert.l2);
        return out;
    }

    // Neither cycle suffices alone: orient so that l1 favours the Leader.
    bool swap = m01 <= cert.c;
    const auto& l1 = swap ? cert.l2 : cert.l1;
    const auto& l2 = swap ? cert.l1 : cert.l2;
    const auto& p2 = swap ? cert.pi3 : cert.pi2;
    const auto& p3 = swap ? cert.pi2 : cert.pi3;
    std::vector<int> prefix = swap ? concat(cert.pi1, cert.pi2) : cert.pi1;

    TradeOffData t;
    std::tie(t.w0_l1, t.w1_l1) = totals(arena, l1);
    std::tie(t.w0_l2, t.w1_l2) = totals(arena, l2);
    t.len_l1 = static_cast<long>(l1.size());
    t.len_l2 = static_cast<long>(l2.size());
    t.alpha = swap ? cert.beta : cert.alpha;
    t.beta = swap ? cert.alpha : cert.beta;
    t.v = static_cast<long>(p2.size() + p3.size());
    auto [z0a, z1a] = totals(arena, p2);
    auto [z0b, z1b] = totals(arena, p3);
    t.z0 = z0a + z0b;
    t.z1 = z1a + z1b;
    t.c_target = c_target;
    t.d = cert.d;
    if (t.w1_l2 - t.d * t.len_l2 <= 0) throw std::logic_error("trade-off cycle does not exceed d");
    out.data = t;
    KTau kt = closed_form_k_tau(t);
    out.closed_form = kt;

    Rational a = t.alpha / t.len_l1;
    Rational k = kt.ok && kt.k > 0 ? kt.k : Rational(1);
    for (;; ++out.doublings) {
        if (out.doublings > 64) throw std::logic_error("regular witness rounding did not converge");
        out.n1 = std::max(Integer(1), ceil_of(a * k));
        // Fewest l2 blocks that keep the Follower's mean at least d.
        Rational need = (t.d * (out.n1 * t.len_l1 + t.v) - out.n1 * t.w1_l1 - t.z1) / (t.w1_l2 - t.d * t.len_l2);
        out.n2 = std::max(Integer(1), ceil_of(need));
        auto [p0, p1] = block_payoffs(t, Rational(out.n1), Rational(out.n2));
        if (p0 > cert.c && p1 >= cert.d) break;
        k *= 2;
    }
    Rational total = out.n1 * t.len_l1 + out.n2 * t.len_l2 + t.v;
    if (total > Rational(static_cast<long>(max_cycle_length))) throw ResourceError("regular witness cycle too long");
    std::vector<int> cycle;
    for (Integer i = 0; i < out.n1; ++i) cycle.insert(cycle.end(), l1.begin(), l1.end());
    cycle.insert(cycle.end(), p2.begin(), p2.end());
    for (Integer i = 0; i < out.n2; ++i) cycle.insert(cycle.end(), l2.begin(), l2.end());
    cycle.insert(cycle.end(), p3.begin(), p3.end());
    out.lasso = make_lasso(arena, cert.vertex, prefix, cycle);
    return out;
}

MealyStrategy witness_strategy(const Arena& arena, const WitnessCertificate& cert, const RegularWitness& witness) {
    const Lasso& l = witness.lasso;
    std::vector<int> track = l.prefix;
    track.insert(track.end(), l.cycle.begin(), l.cycle.end());
    const int n = static_cast<int>(track.size());
    const int loop_start = static_cast<int>(l.prefix.size());

    MealyStrategy s;
    s.player = 0;
    s.initial = 0;
    s.state_names.push_back("init");
    for (int i = 0; i < n; ++i) s.state_names.push_back("pos" + std::to_string(i));
    std::map<int, int> punish_state;
    for (const auto& [u, sigma] : cert.punishing) {
        if (arena.owner(u) != 1) continue;
        punish_state[u] = static_cast<int>(s.state_names.size());
        s.state_names.push_back("punish_" + arena.name(u));
        for (const auto& [key, e] : sigma.choice) s.choice[{punish_state[u], key.second}] = e;
    }
    s.num_states = static_cast<int>(s.state_names.size());

    s.transition[{0, l.start}] = 1;
    for (int i = 0; i < n; ++i) {
        const int state = i + 1;
        const Edge& e = arena.edge(track[i]);
        const int next = (i + 1 < n ? i + 1 : loop_start) + 1;
        if (arena.owner(e.src) == 0) {
            s.choice[{state, e.src}] = track[i];
            s.transition[{state, e.dst}] = next;
            continue;
        }
        auto ps = punish_state.find(e.src);
        if (ps == punish_state.end()) throw std::logic_error("no punishing strategy for a Follower vertex on the lasso");
        for (int out : arena.out_edges(e.src)) {
            int w = arena.edge(out).dst;
            s.transition[{state, w}] = w == e.dst ? next : ps->second;
        }
    }
    return s;
}

}  // namespace asv
