#pragma once

// Random instance generators and brute-force oracles shared by the unit tests
// and the acceptance runner. The oracles deliberately avoid the library's
// region and LP machinery so that agreement means something.

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "asv/arena.hpp"
#include "asv/geometry.hpp"
#include "asv/graph.hpp"
#include "asv/strategy.hpp"

namespace asv::testing {

struct ArenaShape {
    int min_vertices = 2;
    int max_vertices = 4;
    int max_out = 3;
    int weight_lo = -3;
    int weight_hi = 5;
    bool parallel = false;  // allow several edges between one pair
};

inline Arena random_arena(std::mt19937_64& rng, const ArenaShape& shape = {}) {
    std::uniform_int_distribution<int> nv(shape.min_vertices, shape.max_vertices);
    const int n = nv(rng);
    std::uniform_int_distribution<int> owner(0, 1), dst(0, n - 1), outdeg(1, shape.max_out),
        w(shape.weight_lo, shape.weight_hi);
    std::vector<Vertex> vs;
    for (int i = 0; i < n; ++i) vs.push_back({"v" + std::to_string(i), owner(rng)});
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) {
        std::set<int> used;
        int k = outdeg(rng);
        for (int j = 0; j < k; ++j) {
            int t = dst(rng);
            if (!shape.parallel && !used.insert(t).second) continue;
            es.push_back({i, t, w(rng), w(rng)});
        }
    }
    return Arena(std::move(vs), std::move(es));
}

// Random Leader strategy with up to `states` memory states.
inline MealyStrategy random_strategy(std::mt19937_64& rng, const Arena& a, int states) {
    MealyStrategy s;
    s.player = 0;
    s.num_states = std::uniform_int_distribution<int>(1, states)(rng);
    for (int i = 0; i < s.num_states; ++i) s.state_names.push_back("m" + std::to_string(i));
    std::uniform_int_distribution<int> st(0, s.num_states - 1);
    for (int q = 0; q < s.num_states; ++q) {
        for (int v = 0; v < a.num_vertices(); ++v) {
            if (s.num_states > 1) s.transition[{q, v}] = st(rng);
            if (a.owner(v) == 0) {
                const auto& out = a.out_edges(v);
                s.choice[{q, v}] = out[std::uniform_int_distribution<std::size_t>(0, out.size() - 1)(rng)];
            }
        }
    }
    return s;
}

inline Rational random_rational(std::mt19937_64& rng, int lo, int hi, int den) {
    Rational r(std::uniform_int_distribution<int>(lo * den, hi * den)(rng), den);
    r.canonicalize();
    return r;
}

// Does the segment between a and b meet {x <= c, y > ylow} (y >= ylow when
// !strict)? The hull of finitely many points meets that unbounded quadrant iff
// one of the pairwise segments does, so this decides hull membership without
// any LP.
inline bool segment_meets_quadrant(const Point2& a, const Point2& b, const Rational& c, const Rational& ylow,
                                   bool strict) {
    // Parametrise p(t) = a + t (b - a), t in [0, 1]; intersect the t-intervals.
    Rational lo = 0, hi = 1;
    bool lo_open = false, hi_open = false;
    auto clip = [&](const Rational& p0, const Rational& slope, const Rational& bound, bool upper, bool open) {
        // upper: p0 + t*slope <= bound (or < when open); else >= / >.
        Rational s = upper ? slope : Rational(-slope);
        Rational r = upper ? Rational(bound - p0) : Rational(p0 - bound);
        if (s == 0) return open ? r > 0 : r >= 0;
        Rational t = r / s;
        if (s > 0) {
            if (t < hi || (t == hi && open)) {
                hi = t;
                hi_open = open;
            }
        } else {
            if (t > lo || (t == lo && open)) {
                lo = t;
                lo_open = open;
            }
        }
        return true;
    };
    if (!clip(a.x, b.x - a.x, c, true, false)) return false;
    if (!clip(a.y, b.y - a.y, ylow, false, strict)) return false;
    return lo < hi || (lo == hi && !lo_open && !hi_open);
}

inline bool hull_meets_quadrant(const std::vector<Point2>& pts, const Rational& c, const Rational& ylow, bool strict) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i; j < pts.size(); ++j) {
            if (segment_meets_quadrant(pts[i], pts[j], c, ylow, strict)) return true;
        }
    }
    return false;
}

// Brute-force badness: every memoryless Leader strategy lets the Follower reach
// an SCC whose cycle hull meets the bad quadrant.
inline bool brute_bad(const Arena& a, int v, const Rational& c, const Rational& d, const Rational& eps, bool strict) {
    std::vector<bool> all(a.num_vertices(), true);
    for (const auto& s : enumerate_memoryless(a, 0, all, 1u << 20)) {
        Arena fixed = fix_memoryless(a, s);
        bool hit = false;
        for (const auto& scc : reachable_nontrivial_sccs(fixed, v)) {
            std::vector<Point2> pts;
            for (const auto& cyc : enumerate_simple_cycles(fixed, scc)) pts.push_back({cyc.mp0, cyc.mp1});
            if (hull_meets_quadrant(pts, c, d - eps, strict)) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

// Random tree rooted at v0 whose leaves carry a self-loop. Every history is
// determined by the current vertex, so positional strategies are fully general.
inline Arena random_tree(std::mt19937_64& rng, int max_vertices = 7) {
    std::vector<Vertex> vs{{"v0", 0}};
    std::vector<Edge> es;
    std::uniform_int_distribution<int> owner(0, 1), kids(0, 3), w(-3, 5);
    std::vector<int> frontier{0};
    std::vector<bool> has_child(1, false);
    while (!frontier.empty()) {
        int u = frontier.front();
        frontier.erase(frontier.begin());
        int k = static_cast<int>(vs.size()) + 1 >= max_vertices ? 0 : kids(rng);
        for (int i = 0; i < k && static_cast<int>(vs.size()) < max_vertices; ++i) {
            int child = static_cast<int>(vs.size());
            vs.push_back({"v" + std::to_string(child), owner(rng)});
            has_child.push_back(false);
            es.push_back({u, child, w(rng), w(rng)});
            has_child[u] = true;
            frontier.push_back(child);
        }
    }
    for (int u = 0; u < static_cast<int>(vs.size()); ++u)
        if (!has_child[u]) es.push_back({u, u, w(rng), w(rng)});
    return Arena(vs, es);
}

// max over Leader profiles of the worst Leader payoff among Follower answers
// whose second payoff is within eps of the best one (closed: equal to it).
inline Rational tree_value(const Arena& a, const Rational& eps, bool closed) {
    // Leaves reachable under a profile, as (mp0, mp1) of their loop.
    std::function<std::vector<std::pair<Rational, Rational>>(int, const std::vector<int>&)> leaves =
        [&](int u, const std::vector<int>& choice) {
            std::vector<std::pair<Rational, Rational>> out;
            for (int e : a.out_edges(u)) {
                const Edge& ed = a.edge(e);
                if (ed.dst == u) {
                    out.push_back({ed.w0, ed.w1});
                    continue;
                }
                if (a.owner(u) == 0 && choice[u] >= 0 && choice[u] != e) continue;
                auto sub = leaves(ed.dst, choice);
                out.insert(out.end(), sub.begin(), sub.end());
            }
            return out;
        };
    std::vector<std::vector<int>> profiles{std::vector<int>(a.num_vertices(), -1)};
    for (int u = 0; u < a.num_vertices(); ++u) {
        if (a.owner(u) != 0 || a.out_edges(u).size() < 2) continue;
        std::vector<std::vector<int>> next;
        for (const auto& p : profiles)
            for (int e : a.out_edges(u)) {
                auto q = p;
                q[u] = e;
                next.push_back(q);
            }
        profiles = std::move(next);
    }
    std::optional<Rational> best;
    for (const auto& p : profiles) {
        auto ls = leaves(0, p);
        Rational dstar = ls[0].second;
        for (const auto& l : ls) dstar = std::max(dstar, l.second);
        std::optional<Rational> worst;
        for (const auto& l : ls) {
            bool br = closed ? l.second == dstar : l.second > dstar - eps;
            if (br && (!worst || l.first < *worst)) worst = l.first;
        }
        if (!best || *worst > *best) best = worst;
    }
    return *best;
}

}  // namespace asv::testing
