#include <doctest.h>

#include <algorithm>

#include "asv/extended.hpp"
#include "asv/fixtures.hpp"
#include "asv/lambda.hpp"
#include "asv/lasso.hpp"
#include "asv/solver.hpp"
#include "asv/witness.hpp"
#include "asv/zerosum.hpp"
#include "support.hpp"

using namespace asv;

namespace {

Arena single_loop() { return parse_game("vertex a 1\nedge a a 3 5\n"); }

Point at(std::initializer_list<std::pair<Var, Rational>> coords) {
    Point p{};
    for (const auto& [v, r] : coords) p[static_cast<int>(v)] = r;
    return p;
}

bool same_set(const Region& a, const Region& b) {
    return region_empty(region_difference(a, b)) && region_empty(region_difference(b, a));
}

}  // namespace

TEST_CASE("single loop: lambda, threshold and max eps") {
    Arena a = single_loop();
    Region lam = lambda_region(a, 0, EpsSpec::fixed(1));
    Region expect = Region::single(Cell{{Var::C, Var::D},
                                        {LinearConstraint({{Var::C, 1}}, Rel::Ge, 3),
                                         LinearConstraint({{Var::D, 1}}, Rel::Lt, 6)}});
    CHECK(same_set(lam, expect));

    CHECK_FALSE(threshold(a, 0, 3, EpsSpec::fixed(1)).decision);
    ThresholdResult yes = threshold(a, 0, 2, EpsSpec::fixed(1));
    REQUIRE(yes.decision);
    REQUIRE(yes.certificate);
    CHECK(yes.certificate->l1 == std::vector<int>{0});
    CHECK(yes.certificate->alpha == 1);

    CHECK(max_epsilon(a, 0, 2).sup.is_pos_inf());
}

TEST_CASE("zero-sum value of the introductory example") {
    Fixture f = fixture_fig1();
    ZsValueTable t = zs_value(f.arena);
    CHECK(t.value[0] == 4);
    CHECK(t.value[1] == 0);
    CHECK(t.value[2] == 4);
}

TEST_CASE("fixing the left choice leaves the Follower a best mean of 10") {
    Fixture f = fixture_fig1();
    std::vector<int> choice(f.arena.num_vertices(), -1);
    choice[0] = 0;
    Arena fixed = fix_player0_memoryless(f.arena, MealyStrategy::memoryless_from(f.arena, 0, choice));
    CHECK(karp_max_mean(fixed, 1, 0) == 10);
    CHECK(karp_min_mean(fixed, 0, 0) == 0);
}

TEST_CASE("region examples") {
    Region r = Region::single(Cell{{Var::C, Var::Y},
                                   {LinearConstraint({{Var::C, 1}}, Rel::Ge, 0),
                                    LinearConstraint({{Var::Y, 1}}, Rel::Lt, Rational(5, 4))}});
    Region comp = region_union(
        Region::single(Cell{{Var::C, Var::Y}, {LinearConstraint({{Var::C, 1}}, Rel::Lt, 0)}}),
        Region::single(Cell{{Var::C, Var::Y}, {LinearConstraint({{Var::Y, 1}}, Rel::Ge, Rational(5, 4))}}));
    CHECK(same_set(region_complement(r), comp));

    Cell strip{{Var::X, Var::C},
               {LinearConstraint({{Var::X, 1}, {Var::C, -1}}, Rel::Gt, 0),
                LinearConstraint({{Var::X, 1}}, Rel::Le, 1)}};
    Region proj = Region::single(fm_eliminate(strip, Var::X));
    CHECK(same_set(proj, Region::single(Cell{{Var::C}, {LinearConstraint({{Var::C, 1}}, Rel::Lt, 1)}})));

    Region point = Region::single(Cell{{Var::X, Var::Y, Var::C},
                                       {LinearConstraint({{Var::X, 1}}, Rel::Eq, 3),
                                        LinearConstraint({{Var::Y, 1}}, Rel::Eq, 5),
                                        LinearConstraint({{Var::X, 1}, {Var::C, -1}}, Rel::Gt, 0)}});
    SupResult s = lp_sup(point, Var::C);
    CHECK(s.value == ExtRational(Rational(3)));
    CHECK_FALSE(s.attained);

    Region dot = fmin_closure({{Rational(0), Rational(1)}});
    CHECK(dot.contains(at({{Var::X, 0}, {Var::Y, 1}})));
    CHECK_FALSE(dot.contains(at({{Var::X, 0}, {Var::Y, 0}})));
    CHECK(lp_sup(dot, Var::Y).value == ExtRational(Rational(1)));
    CHECK(lp_inf(dot, Var::X).value == ExtRational(Rational(0)));
}

TEST_CASE("lp_sup of a union is the larger of the two") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 100; ++it) {
        auto box = [&] {
            Rational lo = testing::random_rational(rng, -4, 4, 3);
            Rational hi = lo + testing::random_rational(rng, 0, 4, 3);
            Rel up = (rng() & 1) ? Rel::Le : Rel::Lt;
            return Region::single(Cell{{Var::X, Var::Y},
                                       {LinearConstraint({{Var::X, 1}}, Rel::Ge, lo),
                                        LinearConstraint({{Var::X, 1}, {Var::Y, 1}}, up, hi),
                                        LinearConstraint({{Var::Y, 1}}, Rel::Ge, 0)}});
        };
        Region a = box(), b = box();
        SupResult sa = lp_sup(a, Var::X), sb = lp_sup(b, Var::X), su = lp_sup(region_union(a, b), Var::X);
        CHECK(su.value == std::max(sa.value, sb.value));
        if (sa.value != sb.value) CHECK(su.attained == (sa.value > sb.value ? sa.attained : sb.attained));
    }
}

TEST_CASE("cycle counts on small graphs") {
    std::vector<Vertex> vs{{"a", 1}, {"b", 1}, {"c", 1}};
    std::vector<Edge> es;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) es.push_back({i, j, 0, 0});
    Arena k3(vs, es);
    auto sccs = tarjan_scc(k3);
    REQUIRE(sccs.size() == 1);
    CHECK(enumerate_simple_cycles(k3, sccs[0]).size() == 5);

    std::mt19937_64 rng(17);
    for (int it = 0; it < 50; ++it) {
        const int n = 2 + static_cast<int>(rng() % 5);
        std::vector<Vertex> dv;
        std::vector<Edge> de;
        for (int i = 0; i < n; ++i) dv.push_back({"v" + std::to_string(i), 1});
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 2) de.push_back({i, j, 0, 0});
        // Arenas need a successor everywhere: a forward DAG plus one sink loop.
        for (int i = 0; i + 1 < n; ++i) {
            bool has = std::any_of(de.begin(), de.end(), [&](const Edge& e) { return e.src == i; });
            if (!has) de.push_back({i, n - 1, 0, 0});
        }
        de.push_back({n - 1, n - 1, 0, 0});
        Arena dag(dv, de);
        for (const auto& s : tarjan_scc(dag)) {
            bool sink = s.vertices == std::vector<int>{n - 1};
            CHECK(s.is_trivial == !sink);
        }
    }
}

TEST_CASE("lasso payoff is invariant under rotating the cycle") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 40; ++it) {
        Arena a = testing::random_arena(rng);
        auto sccs = reachable_nontrivial_sccs(a, 0);
        if (sccs.empty()) continue;
        for (const auto& cyc : enumerate_simple_cycles(a, sccs[0])) {
            auto base = cycle_mean(a, cyc.edges);
            std::vector<int> rot = cyc.edges;
            for (std::size_t k = 0; k < rot.size(); ++k) {
                std::rotate(rot.begin(), rot.begin() + 1, rot.end());
                CHECK(cycle_mean(a, rot) == base);
            }
            CHECK(base.first == cyc.mp0);
            CHECK(base.second == cyc.mp1);
        }
    }
}

TEST_CASE("product keeps one out-edge per Leader vertex and all Follower edges") {
    std::mt19937_64 rng(29);
    for (int it = 0; it < 60; ++it) {
        Arena a = testing::random_arena(rng);
        MealyStrategy s = testing::random_strategy(rng, a, 3);
        Product p = product_with_strategy(a, s, 0);
        for (int u = 0; u < p.arena.num_vertices(); ++u) {
            int out = 0;
            for (const auto& e : p.arena.edges()) out += e.src == u;
            int bv = p.base_vertex[u];
            if (a.vertex(bv).owner == 0) {
                CHECK(out == 1);
            } else {
                int base_out = 0;
                for (const auto& e : a.edges()) base_out += e.src == bv;
                CHECK(out == base_out);
            }
        }
    }
}

TEST_CASE("extended game tracks the visited set along every edge") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 60; ++it) {
        Arena a = testing::random_arena(rng, {2, 5, 3, -3, 5, false});
        ExtendedArena ext = build_extended_game(a, 0);
        REQUIRE(ext.visited[0] == std::vector<int>{0});
        for (int u = 0; u < ext.arena.num_vertices(); ++u) {
            const auto& P = ext.visited[u];
            CHECK(std::binary_search(P.begin(), P.end(), ext.base_vertex[u]));
        }
        for (std::size_t e = 0; e < ext.arena.edges().size(); ++e) {
            const Edge& ee = ext.arena.edge(static_cast<int>(e));
            std::vector<int> want = ext.visited[ee.src];
            want.push_back(ext.base_vertex[ee.dst]);
            std::sort(want.begin(), want.end());
            want.erase(std::unique(want.begin(), want.end()), want.end());
            CHECK(ext.visited[ee.dst] == want);
            CHECK(a.edge(ext.base_edge[e]).dst == ext.base_vertex[ee.dst]);
        }
    }
}
