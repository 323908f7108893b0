#include <doctest.h>

#include <set>

#include "asv/arena.hpp"
#include "asv/errors.hpp"
#include "asv/lasso.hpp"
#include "asv/perturb.hpp"
#include "asv/strategy.hpp"
#include "support.hpp"

using namespace asv;

TEST_CASE("rational parsing accepts p/q and integers only") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-6/8") == Rational(-3, 4));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("0.5"), DomainError);
    CHECK_THROWS_AS(parse_rational(""), DomainError);
    CHECK(to_string(Rational(-3, 4)) == "-3/4");
}

TEST_CASE("extended rationals order the infinities around the finite values") {
    CHECK(ExtRational::neg_inf() < ExtRational(Rational(-1000)));
    CHECK(ExtRational(Rational(5)) < ExtRational::pos_inf());
    CHECK(ExtRational::pos_inf() == ExtRational::pos_inf());
    CHECK(ExtRational::neg_inf().str() == "-inf");
}

TEST_CASE("arena construction rejects malformed graphs") {
    CHECK_THROWS_WITH_AS(Arena({{"a", 0}, {"a", 1}}, {{0, 0, 0, 0}}), doctest::Contains("duplicate"), DomainError);
    CHECK_THROWS_WITH_AS(Arena({{"a", 0}, {"b", 1}}, {{0, 0, 0, 0}}), doctest::Contains("no outgoing edge"),
                         DomainError);
    CHECK_THROWS_AS(Arena({{"a", 0}}, {{0, 3, 0, 0}}), DomainError);
}

TEST_CASE("game files parse with line numbers in errors") {
    Arena a = parse_game("# demo\nvertex a 0\nvertex b 1\nedge a b 1 -2\nedge b a 0 0\n");
    CHECK(a.num_vertices() == 2);
    CHECK(a.edge(0).w1 == -2);
    try {
        parse_game("vertex a 0\nedge a a 1/2 0\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_game("vertex a 2\nedge a a 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_game("vertex a 0\nedge a b 0 0\n"), DomainError);
}

TEST_CASE("emit and parse round-trip on random arenas") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        Arena a = testing::random_arena(rng, {2, 6, 3, -9, 9, true});
        CHECK(parse_game(emit_game(a)) == a);
    }
}

TEST_CASE("lasso payoff is the mean of the cycle only") {
    Arena a = parse_game("vertex a 0\nvertex b 0\nedge a b 100 -100\nedge b b 3 5\n");
    auto [p0, p1] = lasso_payoff(a, {0}, {1});
    CHECK(p0 == 3);
    CHECK(p1 == 5);
    Lasso l = make_lasso(a, 0, {0}, {1});
    CHECK(l.payoff0 == 3);
    CHECK_THROWS_AS(make_lasso(a, 0, {1}, {1}), DomainError);
    CHECK_THROWS_AS(lasso_payoff(a, {0}, {0}), DomainError);
}

TEST_CASE("cycle mean of a walk that repeats a loop") {
    Arena a = parse_game("vertex v0 1\nvertex v1 0\nedge v0 v1 1 1\nedge v1 v1 0 2\nedge v1 v0 1 1\n");
    // Two turns of the (0,2) loop, then the round trip through v0.
    auto [m0, m1] = cycle_mean(a, {1, 1, 2, 0});
    CHECK(m0 == Rational(1, 2));
    CHECK(m1 == Rational(3, 2));
    CHECK(cycle_mean(a, {2, 0}) == std::make_pair(Rational(1), Rational(1)));
}

TEST_CASE("lasso payoff refuses ambiguous parallel steps") {
    Arena a = parse_game("vertex a 0\nedge a a 1 0\nedge a a 0 1\n");
    CHECK_THROWS_WITH_AS(lasso_payoff(a, {}, {0}), doctest::Contains("ambiguous"), DomainError);
}

TEST_CASE("perturbed samples stay inside the open band and are reproducible") {
    std::mt19937_64 rng(5);
    Arena a = testing::random_arena(rng);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        PerturbedSample h = perturb_game(a, Rational(1, 3), seed, 8);
        CHECK(within_band(a, h.arena, Rational(1, 3)));
        CHECK(perturb_game(a, Rational(1, 3), seed, 8).arena == h.arena);
    }
    CHECK_FALSE(within_band(a, a.with_weights(std::vector<Rational>(a.num_edges(), 100),
                                              std::vector<Rational>(a.num_edges(), 100)),
                            Rational(1)));
}

TEST_CASE("sampler grid: granularity one is the identity, finer grids stay strictly inside") {
    Arena a = parse_game("vertex a 1\nedge a a 5 -5\n");
    CHECK(perturb_game(a, Rational(1, 2), 3, 1).arena == a);
    std::set<Rational> seen;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        Rational w = perturb_game(a, Rational(1, 2), seed, 4).arena.edge(0).w0;
        CHECK(abs_of(w - 5) < Rational(1, 2));
        CHECK((w - 5) * 8 == floor_of((w - 5) * 8));
        seen.insert(w);
    }
    CHECK(seen.size() == 7);
    CHECK_THROWS_AS(perturb_game(a, 0, 1, 4), DomainError);
}

TEST_CASE("product with a two-state strategy tracks memory") {
    // Leader alternates between the two loops at a.
    Arena a = parse_game("vertex a 0\nedge a a 1 0\nedge a a 0 1\n");
    MealyStrategy s;
    s.num_states = 2;
    s.state_names = {"p", "q"};
    s.transition[{0, 0}] = 1;
    s.transition[{1, 0}] = 0;
    s.choice[{0, 0}] = 0;
    s.choice[{1, 0}] = 1;
    Product p = product_with_strategy(a, s, 0);
    CHECK(p.arena.num_vertices() == 2);
    CHECK(p.arena.num_edges() == 2);
    auto cycles = enumerate_simple_cycles(p.arena, tarjan_scc(p.arena).front());
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].mp0 == Rational(1, 2));
    CHECK(cycles[0].mp1 == Rational(1, 2));
}

TEST_CASE("memoryless enumeration respects the guard") {
    Arena a = parse_game("vertex a 0\nvertex b 0\nedge a b 0 0\nedge a a 0 0\nedge b a 0 0\nedge b b 0 0\n");
    std::vector<bool> all(2, true);
    CHECK(enumerate_memoryless(a, 0, all, 10).size() == 4);
    CHECK_THROWS_AS(enumerate_memoryless(a, 0, all, 3), ResourceError);
    CHECK(enumerate_memoryless(a, 0, {true, false}, 10).size() == 2);
}

TEST_CASE("single-successor vertices need no explicit choice") {
    Arena a = parse_game("vertex a 0\nvertex b 0\nvertex c 0\nedge a b 1 0\nedge a c 0 1\nedge b b 2 2\nedge c c 3 3\n");
    MealyStrategy s;
    s.choice[{0, 0}] = 1;
    Product p = product_with_strategy(a, s, 0);
    CHECK(p.arena.num_vertices() == 2);
    s.choice.clear();
    CHECK_THROWS_WITH_AS(product_with_strategy(a, s, 0), doctest::Contains("missing a choice"), DomainError);
}
