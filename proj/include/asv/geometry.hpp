#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asv/rational.hpp"

namespace asv {

// The solver only ever reasons about these five quantities, so variables are a
// closed enum and constraints store a fixed-size coefficient array.
enum class Var : int { X = 0, Y = 1, C = 2, D = 3, Eps = 4 };
inline constexpr int kNumVars = 5;

const char* var_name(Var v);
Var parse_var(const std::string& name);

enum class Rel { Lt, Le, Eq, Ge, Gt };
const char* rel_name(Rel r);
Rel parse_rel(const std::string& s);

using Point = std::array<Rational, kNumVars>;

struct LinearConstraint {
    std::array<Rational, kNumVars> coef{};
    Rel rel = Rel::Le;
    Rational rhs;

    LinearConstraint() = default;
    LinearConstraint(std::initializer_list<std::pair<Var, Rational>> terms, Rel r, Rational b);

    const Rational& operator[](Var v) const { return coef[static_cast<int>(v)]; }
    Rational& operator[](Var v) { return coef[static_cast<int>(v)]; }
    bool trivial() const;
    bool holds(const Point& p) const;
    std::string str() const;
    friend bool operator==(const LinearConstraint& a, const LinearConstraint& b) {
        return a.rel == b.rel && a.rhs == b.rhs && a.coef == b.coef;
    }
};

// Conjunction of constraints over an ordered variable list (enum order).
struct Cell {
    std::vector<Var> vars;
    std::vector<LinearConstraint> cons;

    bool contains(const Point& p) const;
    std::string str() const;
    friend bool operator==(const Cell& a, const Cell& b) { return a.vars == b.vars && a.cons == b.cons; }
};

// Finite union of cells sharing one variable list. No cells = empty set.
struct Region {
    std::vector<Var> vars;
    std::vector<Cell> cells;

    static Region empty(std::vector<Var> vars);
    static Region universe(std::vector<Var> vars);
    static Region single(Cell cell);
    bool contains(const Point& p) const;
    std::string str() const;
};

// Normal form used internally: relation in {Lt, Le, Eq}, first nonzero
// coefficient of magnitude one, parallel constraints merged, opposite pairs
// turned into equalities, trivially true constraints dropped. An infeasible
// cell collapses to the single constraint 0 < 0.
Cell simplify(Cell cell);
// simplify() plus removal of constraints implied by the others, then sorted.
// Two cells with the same denotation over a bounded-dimension cone usually
// canonicalize to the same constraint list; tests compare this form.
Cell canonicalize(Cell cell);

Cell fm_eliminate(const Cell& cell, Var drop);
Cell substitute(const Cell& cell, Var var, const Rational& value);
bool is_empty(const Cell& cell);
bool cell_subset(const Cell& a, const Cell& b);
Cell cell_intersect(const Cell& a, const Cell& b);
// Some rational point of a non-empty cell (deterministic choice).
std::optional<Point> sample_point(const Cell& cell);

Region region_union(const Region& a, const Region& b);
Region region_intersect(const Region& a, const Region& b);
Region region_complement(const Region& a);
// a minus b, negating b one cell at a time so a's bounds prune early.
Region region_difference(const Region& a, const Region& b);
// Drops empty cells and cells contained in another cell.
Region simplify_region(const Region& r);
Region project(const Region& r, Var drop);
Region substitute(const Region& r, Var var, const Rational& value);
// Re-labels `from` as `to`; `to` must not already be a variable of r.
Region rename_var(const Region& r, Var from, Var to);
// Adds variables (unconstrained) to the variable list.
Region lift(const Region& r, const std::vector<Var>& vars);
bool region_empty(const Region& r);

struct SupResult {
    ExtRational value;     // -inf for an empty region
    bool attained = false;
    int cell = -1;         // index of a cell reaching the value
};

SupResult lp_sup(const Region& r, Var objective);
SupResult lp_inf(const Region& r, Var objective);  // value is +inf when empty

struct Point2 {
    Rational x;
    Rational y;
    friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const Point2& a, const Point2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }
};

// Counter-clockwise, starting from the lowest-then-leftmost vertex, no three
// consecutive collinear vertices. One or two vertices for degenerate input.
struct Polygon2D {
    std::vector<Point2> vertices;
};

Polygon2D convex_hull_2d(std::vector<Point2> points);
// Half-plane description of a hull over (vx, vy).
Cell polygon_cell(const Polygon2D& poly, Var vx = Var::X, Var vy = Var::Y);
// F_min(CH(points)): hull of the points and their pairwise pointwise minima.
Region fmin_closure(const std::vector<Point2>& points);
Polygon2D fmin_hull(const std::vector<Point2>& points);

// SVG picture of a region over exactly two variables inside a window.
struct SvgWindow {
    Rational xmin = -1, xmax = 3, ymin = -1, ymax = 3;
};
std::string region_svg(const std::vector<std::pair<Region, std::string>>& layers, const SvgWindow& window,
                       const std::string& title = "");

}  // namespace asv
