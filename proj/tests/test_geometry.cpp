#include <doctest.h>

#include <algorithm>

#include "asv/errors.hpp"
#include "asv/geometry.hpp"
#include "asv/simplex.hpp"
#include "support.hpp"

using namespace asv;

namespace {

using V = Var;

// mpq_class(n, d) is not canonicalised, and GMP arithmetic requires it.
Rational half(int n) {
    Rational r(n, 2);
    r.canonicalize();
    return r;
}

LinearConstraint random_constraint(std::mt19937_64& rng, const std::vector<Var>& vars) {
    std::uniform_int_distribution<int> coef(-2, 2), rhs(-4, 4), rel(0, 4);
    LinearConstraint c;
    for (Var v : vars) c[v] = coef(rng);
    c.rel = static_cast<Rel>(rel(rng));
    c.rhs = rhs(rng);
    return c;
}

Region random_region(std::mt19937_64& rng, const std::vector<Var>& vars, int max_cells = 2, int max_cons = 3) {
    Region r = Region::empty(vars);
    int cells = std::uniform_int_distribution<int>(1, max_cells)(rng);
    for (int i = 0; i < cells; ++i) {
        Cell c{vars, {}};
        int k = std::uniform_int_distribution<int>(1, max_cons)(rng);
        for (int j = 0; j < k; ++j) c.cons.push_back(random_constraint(rng, vars));
        r.cells.push_back(c);
    }
    return r;
}

// Grid over [-4, 4]^n at step 1/2 in the given variables, others zero.
std::vector<Point> grid(const std::vector<Var>& vars) {
    std::vector<Point> pts(1);
    for (Var v : vars) {
        std::vector<Point> next;
        for (const auto& p : pts) {
            for (int i = -8; i <= 8; ++i) {
                Point q = p;
                q[static_cast<int>(v)] = half(i);
                next.push_back(q);
            }
        }
        pts = std::move(next);
    }
    return pts;
}

}  // namespace

TEST_CASE("convex hull matches a brute-force extreme point test") {
    std::mt19937_64 rng(4);
    for (int it = 0; it < 100; ++it) {
        std::vector<Point2> pts;
        int n = std::uniform_int_distribution<int>(1, 9)(rng);
        for (int i = 0; i < n; ++i) pts.push_back({testing::random_rational(rng, -3, 3, 2), testing::random_rational(rng, -3, 3, 2)});
        Polygon2D h = convex_hull_2d(pts);
        // A point is a hull vertex iff it is not in the hull of the others.
        std::vector<Point2> uniq = pts;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        std::vector<Point2> extreme;
        for (std::size_t i = 0; i < uniq.size(); ++i) {
            std::vector<Point2> rest;
            for (std::size_t j = 0; j < uniq.size(); ++j)
                if (j != i) rest.push_back(uniq[j]);
            bool inside = false;
            if (!rest.empty()) {
                Cell c = polygon_cell(convex_hull_2d(rest));
                Point p{};
                p[0] = uniq[i].x;
                p[1] = uniq[i].y;
                inside = c.contains(p);
            }
            if (!inside) extreme.push_back(uniq[i]);
        }
        auto got = h.vertices;
        std::sort(got.begin(), got.end());
        CHECK(got == extreme);
        // Counter-clockwise orientation for proper polygons.
        if (h.vertices.size() >= 3) {
            for (std::size_t i = 0; i < h.vertices.size(); ++i) {
                const auto& a = h.vertices[i];
                const auto& b = h.vertices[(i + 1) % h.vertices.size()];
                const auto& c = h.vertices[(i + 2) % h.vertices.size()];
                CHECK((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x) > 0);
            }
        }
    }
}

TEST_CASE("fm elimination agrees with grid projection") {
    std::mt19937_64 rng(5);
    const std::vector<Var> vars{V::X, V::Y};
    for (int it = 0; it < 60; ++it) {
        Cell c{vars, {}};
        for (int j = 0; j < 3; ++j) c.cons.push_back(random_constraint(rng, vars));
        Cell p = fm_eliminate(c, V::Y);
        for (int xi = -8; xi <= 8; ++xi) {
            Rational x = half(xi);
            Cell at = substitute(c, V::X, x);
            Point pt{};
            pt[0] = x;
            CHECK(p.contains(pt) == !is_empty(at));
        }
    }
}

TEST_CASE("region complement and difference agree with pointwise membership") {
    std::mt19937_64 rng(6);
    const std::vector<Var> vars{V::X, V::Y};
    auto pts = grid(vars);
    for (int it = 0; it < 40; ++it) {
        Region a = random_region(rng, vars);
        Region b = random_region(rng, vars);
        Region comp = region_complement(a);
        Region diff = region_difference(a, b);
        Region uni = region_union(a, b);
        Region inter = region_intersect(a, b);
        Region simp = simplify_region(a);
        for (const auto& p : pts) {
            bool ina = a.contains(p), inb = b.contains(p);
            CHECK(comp.contains(p) == !ina);
            CHECK(diff.contains(p) == (ina && !inb));
            CHECK(uni.contains(p) == (ina || inb));
            CHECK(inter.contains(p) == (ina && inb));
            CHECK(simp.contains(p) == ina);
        }
    }
}

TEST_CASE("region emptiness matches sample points") {
    std::mt19937_64 rng(7);
    const std::vector<Var> vars{V::X, V::Y, V::C};
    for (int it = 0; it < 100; ++it) {
        Cell c{vars, {}};
        for (int j = 0; j < 4; ++j) c.cons.push_back(random_constraint(rng, vars));
        auto s = sample_point(c);
        CHECK(s.has_value() == !is_empty(c));
        if (s) CHECK(c.contains(*s));
    }
}

TEST_CASE("lp_sup is an upper bound that grid points approach") {
    std::mt19937_64 rng(8);
    const std::vector<Var> vars{V::X, V::Y};
    auto pts = grid(vars);
    for (int it = 0; it < 60; ++it) {
        Region r = random_region(rng, vars, 2, 4);
        // Keep everything inside the grid box so the sup is finite when non-empty.
        for (auto& c : r.cells) {
            c.cons.push_back(LinearConstraint({{V::X, 1}}, Rel::Le, 4));
            c.cons.push_back(LinearConstraint({{V::X, 1}}, Rel::Ge, -4));
            c.cons.push_back(LinearConstraint({{V::Y, 1}}, Rel::Le, 4));
            c.cons.push_back(LinearConstraint({{V::Y, 1}}, Rel::Ge, -4));
        }
        SupResult s = lp_sup(r, V::X);
        std::optional<Rational> best;
        for (const auto& p : pts)
            if (r.contains(p) && (!best || p[0] > *best)) best = p[0];
        if (region_empty(r)) {
            CHECK(s.value.is_neg_inf());
            continue;
        }
        REQUIRE(s.value.finite());
        if (best) CHECK(*best <= s.value.value());
        // Attainment means the optimum is a member of the region.
        if (s.attained) {
            Region at = region_intersect(r, Region::single(Cell{vars, {LinearConstraint({{V::X, 1}}, Rel::Eq, s.value.value())}}));
            CHECK_FALSE(region_empty(at));
        } else {
            Region at = region_intersect(r, Region::single(Cell{vars, {LinearConstraint({{V::X, 1}}, Rel::Ge, s.value.value())}}));
            CHECK(region_empty(at));
        }
        // Anything slightly below the sup is feasible.
        Region below = region_intersect(
            r, Region::single(Cell{vars, {LinearConstraint({{V::X, 1}}, Rel::Gt, s.value.value() - Rational(1, 1000))}}));
        CHECK_FALSE(region_empty(below));
        SupResult inf = lp_inf(r, V::X);
        CHECK(inf.value <= s.value);
    }
}

TEST_CASE("lp_sup on simple shapes") {
    const std::vector<Var> vars{V::X, V::Y};
    Region open = Region::single(Cell{vars, {LinearConstraint({{V::X, 1}, {V::Y, 1}}, Rel::Lt, 2),
                                             LinearConstraint({{V::Y, 1}}, Rel::Ge, 0)}});
    auto s = lp_sup(open, V::X);
    CHECK(s.value == ExtRational(Rational(2)));
    CHECK_FALSE(s.attained);
    Region ray = Region::single(Cell{vars, {LinearConstraint({{V::X, 1}, {V::Y, -1}}, Rel::Ge, 0)}});
    CHECK(lp_sup(ray, V::X).value.is_pos_inf());
    CHECK(lp_sup(Region::empty(vars), V::X).value.is_neg_inf());
    CHECK(lp_inf(Region::empty(vars), V::X).value.is_pos_inf());
}

TEST_CASE("projection and substitution") {
    const std::vector<Var> vars{V::X, V::C};
    // x > c, 0 <= x <= 1  projects to c < 1 over c.
    Region r = Region::single(Cell{vars, {LinearConstraint({{V::X, 1}, {V::C, -1}}, Rel::Gt, 0),
                                          LinearConstraint({{V::X, 1}}, Rel::Ge, 0),
                                          LinearConstraint({{V::X, 1}}, Rel::Le, 1)}});
    Region p = project(r, V::X);
    CHECK(p.vars == std::vector<Var>{V::C});
    auto s = lp_sup(p, V::C);
    CHECK(s.value == ExtRational(Rational(1)));
    CHECK_FALSE(s.attained);
    Region at = substitute(r, V::C, Rational(1, 2));
    CHECK(lp_sup(at, V::X).value == ExtRational(Rational(1)));
    CHECK(lp_inf(at, V::X).value == ExtRational(Rational(1, 2)));
    CHECK_THROWS_AS(rename_var(r, V::X, V::C), DomainError);
    Region renamed = rename_var(r, V::C, V::D);
    CHECK(renamed.vars == std::vector<Var>{V::X, V::D});
}

TEST_CASE("fmin closure adds pointwise minima") {
    // Two incomparable points (2,0) and (0,2) gain the corner (0,0).
    Region f = fmin_closure({{2, 0}, {0, 2}});
    Point p{};
    CHECK(f.contains(p));
    p[0] = 1;
    p[1] = 1;
    CHECK(f.contains(p));
    p[0] = Rational(3, 2);
    p[1] = Rational(3, 2);
    CHECK_FALSE(f.contains(p));
    auto hull = fmin_hull({{2, 0}, {0, 2}});
    CHECK(hull.vertices.size() == 3);
    // Comparable points: the closure is just their segment.
    CHECK(fmin_hull({{0, 0}, {1, 1}}).vertices.size() == 2);
}

TEST_CASE("simplex solves small programs exactly") {
    // max x + y, x + 2y <= 4, 3x + y <= 6
    LpProblem lp;
    lp.num_vars = 2;
    lp.rows = {{1, 2}, {3, 1}};
    lp.rel = {Rel::Le, Rel::Le};
    lp.rhs = {4, 6};
    lp.objective = {1, 1};
    auto s = simplex_maximize(lp);
    REQUIRE(s.status == LpSolution::Status::Optimal);
    CHECK(s.value == Rational(14, 5));
    CHECK(s.x[0] == Rational(8, 5));
    CHECK(s.x[1] == Rational(6, 5));

    lp.rows = {{1, -1}};
    lp.rel = {Rel::Le};
    lp.rhs = {1};
    CHECK(simplex_maximize(lp).status == LpSolution::Status::Unbounded);

    lp.rows = {{1, 1}, {1, 1}};
    lp.rel = {Rel::Le, Rel::Ge};
    lp.rhs = {1, 2};
    CHECK(simplex_maximize(lp).status == LpSolution::Status::Infeasible);

    lp.rows = {{1, 1}};
    lp.rel = {Rel::Eq};
    lp.rhs = {3};
    lp.objective = {2, 1};
    s = simplex_maximize(lp);
    CHECK(s.value == 6);
}

TEST_CASE("simplex optimum dominates random feasible points") {
    std::mt19937_64 rng(9);
    for (int it = 0; it < 50; ++it) {
        LpProblem lp;
        lp.num_vars = 3;
        for (int i = 0; i < 3; ++i) {
            std::vector<Rational> row;
            for (int j = 0; j < 3; ++j) row.push_back(std::uniform_int_distribution<int>(0, 4)(rng));
            lp.rows.push_back(row);
            lp.rel.push_back(Rel::Le);
            lp.rhs.push_back(std::uniform_int_distribution<int>(1, 8)(rng));
        }
        for (int j = 0; j < 3; ++j) lp.objective.push_back(std::uniform_int_distribution<int>(-2, 3)(rng));
        auto s = simplex_maximize(lp);
        if (s.status != LpSolution::Status::Optimal) continue;
        for (int k = 0; k < 200; ++k) {
            std::vector<Rational> x;
            for (int j = 0; j < 3; ++j) x.push_back(testing::random_rational(rng, 0, 3, 4));
            bool feasible = true;
            for (int i = 0; i < 3; ++i) {
                Rational lhs = 0;
                for (int j = 0; j < 3; ++j) lhs += lp.rows[i][j] * x[j];
                feasible &= lhs <= lp.rhs[i];
            }
            if (!feasible) continue;
            Rational obj = 0;
            for (int j = 0; j < 3; ++j) obj += lp.objective[j] * x[j];
            CHECK(obj <= s.value);
        }
    }
}
