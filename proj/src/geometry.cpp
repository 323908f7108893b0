#include "asv/geometry.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "asv/errors.hpp"

namespace asv {

namespace {

constexpr std::array<Var, kNumVars> kAllVars{Var::X, Var::Y, Var::C, Var::D, Var::Eps};

int idx(Var v) { return static_cast<int>(v); }

using Coefs = std::array<Rational, kNumVars>;

int compare_coefs(const Coefs& a, const Coefs& b) {
    for (int i = 0; i < kNumVars; ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

struct CoefLess {
    bool operator()(const Coefs& a, const Coefs& b) const { return compare_coefs(a, b) < 0; }
};

LinearConstraint false_constraint() {
    LinearConstraint c;
    c.rel = Rel::Lt;
    c.rhs = 0;
    return c;
}

Cell false_cell(std::vector<Var> vars) { return Cell{std::move(vars), {false_constraint()}}; }

bool is_false_cell(const Cell& c) { return c.cons.size() == 1 && c.cons[0].trivial() && !c.cons[0].holds(Point{}); }

// Rewrites Ge/Gt as Le/Lt and scales so the first nonzero coefficient has
// magnitude one (exactly +1 for equalities).
LinearConstraint to_normal(LinearConstraint c) {
    if (c.rel == Rel::Ge || c.rel == Rel::Gt) {
        for (auto& a : c.coef) a = -a;
        c.rhs = -c.rhs;
        c.rel = c.rel == Rel::Ge ? Rel::Le : Rel::Lt;
    }
    for (const auto& a : c.coef) {
        if (a == 0) continue;
        Rational s = c.rel == Rel::Eq ? Rational(1 / a) : Rational(1 / abs_of(a));
        for (auto& b : c.coef) b *= s;
        c.rhs *= s;
        break;
    }
    return c;
}

Coefs negated(const Coefs& a) {
    Coefs out;
    for (int i = 0; i < kNumVars; ++i) out[i] = -a[i];
    return out;
}

bool first_nonzero_positive(const Coefs& a) {
    for (const auto& x : a) {
        if (x != 0) return x > 0;
    }
    return true;
}

// Negation of a normalised constraint as a disjunction of constraints.
std::vector<LinearConstraint> negate(const LinearConstraint& c) {
    LinearConstraint flipped;
    flipped.coef = negated(c.coef);
    flipped.rhs = -c.rhs;
    if (c.rel == Rel::Le) {
        flipped.rel = Rel::Lt;
        return {flipped};
    }
    if (c.rel == Rel::Lt) {
        flipped.rel = Rel::Le;
        return {flipped};
    }
    LinearConstraint below = c;
    below.rel = Rel::Lt;
    flipped.rel = Rel::Lt;
    return {below, flipped};
}

void check_vars(const std::vector<Var>& a, const std::vector<Var>& b) {
    if (a != b) throw DomainError("region variable lists differ");
}

std::vector<Var> sorted_vars(std::vector<Var> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

const char* var_name(Var v) {
    static const char* names[] = {"x", "y", "c", "d", "eps"};
    return names[idx(v)];
}

Var parse_var(const std::string& name) {
    for (Var v : kAllVars) {
        if (name == var_name(v)) return v;
    }
    throw DomainError("unknown variable '" + name + "'");
}

const char* rel_name(Rel r) {
    switch (r) {
        case Rel::Lt: return "<";
        case Rel::Le: return "<=";
        case Rel::Eq: return "=";
        case Rel::Ge: return ">=";
        default: return ">";
    }
}

Rel parse_rel(const std::string& s) {
    for (Rel r : {Rel::Lt, Rel::Le, Rel::Eq, Rel::Ge, Rel::Gt}) {
        if (s == rel_name(r)) return r;
    }
    throw DomainError("unknown relation '" + s + "'");
}

LinearConstraint::LinearConstraint(std::initializer_list<std::pair<Var, Rational>> terms, Rel r, Rational b)
    : rel(r), rhs(std::move(b)) {
    for (const auto& [v, a] : terms) coef[idx(v)] += a;
}

bool LinearConstraint::trivial() const {
    return std::all_of(coef.begin(), coef.end(), [](const Rational& a) { return a == 0; });
}

bool LinearConstraint::holds(const Point& p) const {
    Rational lhs = 0;
    for (int i = 0; i < kNumVars; ++i) {
        if (coef[i] != 0) lhs += coef[i] * p[i];
    }
    switch (rel) {
        case Rel::Lt: return lhs < rhs;
        case Rel::Le: return lhs <= rhs;
        case Rel::Eq: return lhs == rhs;
        case Rel::Ge: return lhs >= rhs;
        default: return lhs > rhs;
    }
}

std::string LinearConstraint::str() const {
    std::ostringstream out;
    bool first = true;
    for (Var v : kAllVars) {
        const Rational& a = coef[idx(v)];
        if (a == 0) continue;
        if (!first) out << (a > 0 ? " + " : " - ");
        else if (a < 0) out << "-";
        Rational m = abs_of(a);
        if (m != 1) out << m << "*";
        out << var_name(v);
        first = false;
    }
    if (first) out << "0";
    out << ' ' << rel_name(rel) << ' ' << rhs;
    return out.str();
}

bool Cell::contains(const Point& p) const {
    return std::all_of(cons.begin(), cons.end(), [&](const LinearConstraint& c) { return c.holds(p); });
}

std::string Cell::str() const {
    if (cons.empty()) return "true";
    std::string out;
    for (std::size_t i = 0; i < cons.size(); ++i) out += (i ? " && " : "") + cons[i].str();
    return out;
}

Region Region::empty(std::vector<Var> vars) { return Region{sorted_vars(std::move(vars)), {}}; }

Region Region::universe(std::vector<Var> vars) {
    auto v = sorted_vars(std::move(vars));
    return Region{v, {Cell{v, {}}}};
}

Region Region::single(Cell cell) {
    cell.vars = sorted_vars(cell.vars);
    Region r{cell.vars, {}};
    r.cells.push_back(std::move(cell));
    return r;
}

bool Region::contains(const Point& p) const {
    return std::any_of(cells.begin(), cells.end(), [&](const Cell& c) { return c.contains(p); });
}

std::string Region::str() const {
    if (cells.empty()) return "false";
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "  ||  " : "") + ("(" + cells[i].str() + ")");
    return out;
}

Cell simplify(Cell cell) {
    std::map<Coefs, Rational, CoefLess> eqs;
    std::map<Coefs, std::pair<Rational, bool>, CoefLess> ineqs;  // key -> (rhs, strict)
    for (const auto& raw : cell.cons) {
        LinearConstraint c = to_normal(raw);
        if (c.trivial()) {
            if (!c.holds(Point{})) return false_cell(cell.vars);
            continue;
        }
        if (c.rel == Rel::Eq) {
            auto [it, fresh] = eqs.emplace(c.coef, c.rhs);
            if (!fresh && it->second != c.rhs) return false_cell(cell.vars);
            continue;
        }
        bool strict = c.rel == Rel::Lt;
        auto it = ineqs.find(c.coef);
        if (it == ineqs.end()) {
            ineqs.emplace(c.coef, std::make_pair(c.rhs, strict));
        } else if (c.rhs < it->second.first || (c.rhs == it->second.first && strict)) {
            it->second = {c.rhs, strict};
        }
    }
    // Inequalities parallel to an equality are either implied or contradictory.
    for (auto it = ineqs.begin(); it != ineqs.end();) {
        bool pos = first_nonzero_positive(it->first);
        auto eq = eqs.find(pos ? it->first : negated(it->first));
        if (eq == eqs.end()) {
            ++it;
            continue;
        }
        Rational value = pos ? eq->second : Rational(-eq->second);
        const auto& [b, strict] = it->second;
        if (value > b || (value == b && strict)) return false_cell(cell.vars);
        it = ineqs.erase(it);
    }
    // Opposite inequality pairs: -b2 <= k.z <= b1.
    for (auto it = ineqs.begin(); it != ineqs.end();) {
        if (!first_nonzero_positive(it->first)) {
            ++it;
            continue;
        }
        auto opp = ineqs.find(negated(it->first));
        if (opp == ineqs.end()) {
            ++it;
            continue;
        }
        Rational lo = -opp->second.first;
        const Rational& hi = it->second.first;
        bool strict = it->second.second || opp->second.second;
        if (lo > hi || (lo == hi && strict)) return false_cell(cell.vars);
        if (lo == hi) {
            eqs.emplace(it->first, hi);
            ineqs.erase(opp);
            it = ineqs.erase(it);
        } else {
            ++it;
        }
    }
    Cell out{cell.vars, {}};
    for (const auto& [k, b] : eqs) {
        LinearConstraint c;
        c.coef = k;
        c.rel = Rel::Eq;
        c.rhs = b;
        out.cons.push_back(std::move(c));
    }
    for (const auto& [k, bs] : ineqs) {
        LinearConstraint c;
        c.coef = k;
        c.rel = bs.second ? Rel::Lt : Rel::Le;
        c.rhs = bs.first;
        out.cons.push_back(std::move(c));
    }
    return out;
}

Cell fm_eliminate(const Cell& cell, Var drop) {
    std::vector<Var> vars;
    for (Var v : cell.vars) {
        if (v != drop) vars.push_back(v);
    }
    Cell s = simplify(cell);
    if (is_false_cell(s)) return false_cell(vars);
    const int j = idx(drop);

    // An equality mentioning the variable lets us substitute it away exactly.
    for (std::size_t k = 0; k < s.cons.size(); ++k) {
        const LinearConstraint& eq = s.cons[k];
        if (eq.rel != Rel::Eq || eq.coef[j] == 0) continue;
        Cell out{vars, {}};
        for (std::size_t i = 0; i < s.cons.size(); ++i) {
            if (i == k) continue;
            LinearConstraint c = s.cons[i];
            if (c.coef[j] != 0) {
                Rational f = c.coef[j] / eq.coef[j];
                for (int t = 0; t < kNumVars; ++t) c.coef[t] -= f * eq.coef[t];
                c.rhs -= f * eq.rhs;
            }
            out.cons.push_back(std::move(c));
        }
        return simplify(std::move(out));
    }

    std::vector<const LinearConstraint*> lower, upper;
    Cell out{vars, {}};
    for (const auto& c : s.cons) {
        if (c.coef[j] > 0) upper.push_back(&c);
        else if (c.coef[j] < 0) lower.push_back(&c);
        else out.cons.push_back(c);
    }
    for (const auto* u : upper) {
        for (const auto* l : lower) {
            // u/u_j + l/(-l_j) cancels the variable; strict if either side is.
            Rational fu = 1 / u->coef[j];
            Rational fl = 1 / -l->coef[j];
            LinearConstraint c;
            for (int t = 0; t < kNumVars; ++t) c.coef[t] = fu * u->coef[t] + fl * l->coef[t];
            c.coef[j] = 0;
            c.rhs = fu * u->rhs + fl * l->rhs;
            c.rel = (u->rel == Rel::Lt || l->rel == Rel::Lt) ? Rel::Lt : Rel::Le;
            out.cons.push_back(std::move(c));
        }
    }
    return simplify(std::move(out));
}

Cell substitute(const Cell& cell, Var var, const Rational& value) {
    Cell out{{}, {}};
    for (Var v : cell.vars) {
        if (v != var) out.vars.push_back(v);
    }
    for (LinearConstraint c : cell.cons) {
        Rational& a = c[var];
        if (a != 0) {
            c.rhs -= a * value;
            a = 0;
        }
        out.cons.push_back(std::move(c));
    }
    return simplify(std::move(out));
}

bool is_empty(const Cell& cell) {
    Cell cur = simplify(cell);
    for (Var v : cell.vars) {
        if (is_false_cell(cur)) return true;
        cur = fm_eliminate(cur, v);
    }
    return is_false_cell(cur);
}

Cell cell_intersect(const Cell& a, const Cell& b) {
    check_vars(a.vars, b.vars);
    Cell out{a.vars, a.cons};
    out.cons.insert(out.cons.end(), b.cons.begin(), b.cons.end());
    return simplify(std::move(out));
}

bool cell_subset(const Cell& a, const Cell& b) {
    if (is_empty(a)) return true;
    for (const auto& k : simplify(b).cons) {
        for (const auto& piece : negate(k)) {
            Cell probe{a.vars, a.cons};
            probe.cons.push_back(piece);
            if (!is_empty(probe)) return false;
        }
    }
    return true;
}

Cell canonicalize(Cell cell) {
    Cell s = simplify(std::move(cell));
    if (is_false_cell(s)) return s;
    // Drop constraints implied by the remaining ones, last to first.
    for (std::size_t i = s.cons.size(); i-- > 0;) {
        Cell rest{s.vars, {}};
        for (std::size_t k = 0; k < s.cons.size(); ++k) {
            if (k != i) rest.cons.push_back(s.cons[k]);
        }
        bool implied = true;
        for (const auto& piece : negate(s.cons[i])) {
            Cell probe = rest;
            probe.cons.push_back(piece);
            if (!is_empty(probe)) {
                implied = false;
                break;
            }
        }
        if (implied) s = simplify(std::move(rest));
    }
    std::sort(s.cons.begin(), s.cons.end(), [](const LinearConstraint& a, const LinearConstraint& b) {
        int c = compare_coefs(a.coef, b.coef);
        if (c != 0) return c < 0;
        if (a.rel != b.rel) return a.rel < b.rel;
        return a.rhs < b.rhs;
    });
    return s;
}

std::optional<Point> sample_point(const Cell& cell) {
    std::vector<Cell> chain{simplify(cell)};
    for (Var v : cell.vars) chain.push_back(fm_eliminate(chain.back(), v));
    if (is_false_cell(chain.back())) return std::nullopt;

    Point p{};
    // chain[i] still has variables vars[i..]; fix them from the back.
    for (std::size_t i = cell.vars.size(); i-- > 0;) {
        Cell cur = chain[i];
        for (std::size_t k = i + 1; k < cell.vars.size(); ++k) cur = substitute(cur, cell.vars[k], p[idx(cell.vars[k])]);
        const int j = idx(cell.vars[i]);
        std::optional<std::pair<Rational, bool>> lo, hi;
        std::optional<Rational> fixed;
        for (const auto& c : cur.cons) {
            if (c.coef[j] == 0) continue;
            Rational bound = c.rhs / c.coef[j];
            bool strict = c.rel == Rel::Lt;
            if (c.rel == Rel::Eq) {
                fixed = bound;
            } else if (c.coef[j] > 0) {
                if (!hi || bound < hi->first || (bound == hi->first && strict)) hi = std::make_pair(bound, strict);
            } else {
                if (!lo || bound > lo->first || (bound == lo->first && strict)) lo = std::make_pair(bound, strict);
            }
        }
        Rational value;
        if (fixed) value = *fixed;
        else if (lo && hi) value = lo->first == hi->first ? lo->first : Rational((lo->first + hi->first) / 2);
        else if (lo) value = lo->second ? Rational(lo->first + 1) : lo->first;
        else if (hi) value = hi->second ? Rational(hi->first - 1) : hi->first;
        else value = 0;
        p[j] = value;
    }
    if (!cell.contains(p)) throw std::logic_error("sample_point produced a point outside the cell");
    return p;
}

Region simplify_region(const Region& r) {
    std::vector<Cell> live;
    for (const auto& c : r.cells) {
        Cell s = simplify(c);
        if (!is_empty(s)) live.push_back(std::move(s));
    }
    std::vector<bool> drop(live.size(), false);
    for (std::size_t i = 0; i < live.size(); ++i) {
        for (std::size_t j = 0; j < live.size() && !drop[i]; ++j) {
            if (i == j || drop[j]) continue;
            if (cell_subset(live[i], live[j])) drop[i] = true;
        }
    }
    Region out{r.vars, {}};
    for (std::size_t i = 0; i < live.size(); ++i) {
        if (!drop[i]) out.cells.push_back(std::move(live[i]));
    }
    return out;
}

Region region_union(const Region& a, const Region& b) {
    check_vars(a.vars, b.vars);
    Region out{a.vars, a.cells};
    out.cells.insert(out.cells.end(), b.cells.begin(), b.cells.end());
    return simplify_region(out);
}

Region region_intersect(const Region& a, const Region& b) {
    check_vars(a.vars, b.vars);
    Region out{a.vars, {}};
    for (const auto& x : a.cells) {
        for (const auto& y : b.cells) {
            Cell c = cell_intersect(x, y);
            if (!is_false_cell(c)) out.cells.push_back(std::move(c));
        }
    }
    return simplify_region(out);
}

Region region_complement(const Region& a) { return region_difference(Region::universe(a.vars), a); }

Region region_difference(const Region& a, const Region& b) {
    check_vars(a.vars, b.vars);
    Region acc = simplify_region(a);
    for (const auto& raw : b.cells) {
        Cell c = simplify(raw);
        if (is_false_cell(c)) continue;
        Region neg{a.vars, {}};
        for (const auto& k : c.cons) {
            for (auto& piece : negate(k)) neg.cells.push_back(Cell{a.vars, {piece}});
        }
        acc = region_intersect(acc, neg);
        if (acc.cells.empty()) break;
    }
    return acc;
}

Region project(const Region& r, Var drop) {
    Region out{{}, {}};
    for (Var v : r.vars) {
        if (v != drop) out.vars.push_back(v);
    }
    for (const auto& c : r.cells) out.cells.push_back(fm_eliminate(c, drop));
    return simplify_region(out);
}

Region substitute(const Region& r, Var var, const Rational& value) {
    Region out{{}, {}};
    for (Var v : r.vars) {
        if (v != var) out.vars.push_back(v);
    }
    for (const auto& c : r.cells) out.cells.push_back(substitute(c, var, value));
    return simplify_region(out);
}

Region rename_var(const Region& r, Var from, Var to) {
    if (std::find(r.vars.begin(), r.vars.end(), to) != r.vars.end()) {
        throw DomainError(std::string("rename target '") + var_name(to) + "' already present");
    }
    std::vector<Var> vars;
    for (Var v : r.vars) vars.push_back(v == from ? to : v);
    vars = sorted_vars(vars);
    Region out{vars, {}};
    for (const auto& c : r.cells) {
        Cell n{vars, c.cons};
        for (auto& k : n.cons) std::swap(k[from], k[to]);
        out.cells.push_back(std::move(n));
    }
    return out;
}

Region lift(const Region& r, const std::vector<Var>& vars) {
    std::vector<Var> all = r.vars;
    all.insert(all.end(), vars.begin(), vars.end());
    all = sorted_vars(all);
    Region out{all, r.cells};
    for (auto& c : out.cells) c.vars = all;
    return out;
}

bool region_empty(const Region& r) {
    return std::all_of(r.cells.begin(), r.cells.end(), [](const Cell& c) { return is_empty(c); });
}

namespace {

SupResult extreme(const Region& r, Var objective, int sign) {
    SupResult best;
    best.value = sign > 0 ? ExtRational::neg_inf() : ExtRational::pos_inf();
    const int j = idx(objective);
    for (std::size_t ci = 0; ci < r.cells.size(); ++ci) {
        Cell cur = simplify(r.cells[ci]);
        for (Var v : r.vars) {
            if (v != objective) cur = fm_eliminate(cur, v);
        }
        if (is_false_cell(cur)) continue;
        // Constraints now read  a*obj (rel) b  with a = +-1.
        ExtRational value = sign > 0 ? ExtRational::pos_inf() : ExtRational::neg_inf();
        bool attained = false;
        for (const auto& c : cur.cons) {
            if (c.coef[j] == 0) continue;
            Rational bound = c.rhs / c.coef[j];
            bool binds = c.rel == Rel::Eq || (sign > 0 ? c.coef[j] > 0 : c.coef[j] < 0);
            if (!binds) continue;
            bool strict = c.rel == Rel::Lt;
            bool tighter = sign > 0 ? ExtRational(bound) < value : ExtRational(bound) > value;
            if (tighter) {
                value = bound;
                attained = !strict;
            } else if (ExtRational(bound) == value && strict) {
                attained = false;
            }
        }
        bool better = sign > 0 ? value > best.value : value < best.value;
        if (better || best.cell < 0) {
            best.value = value;
            best.attained = attained;
            best.cell = static_cast<int>(ci);
        } else if (value == best.value && attained && !best.attained) {
            best.attained = true;
            best.cell = static_cast<int>(ci);
        }
    }
    return best;
}

Rational cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

SupResult lp_sup(const Region& r, Var objective) { return extreme(r, objective, 1); }

SupResult lp_inf(const Region& r, Var objective) { return extreme(r, objective, -1); }

Polygon2D convex_hull_2d(std::vector<Point2> points) {
    if (points.empty()) throw DomainError("convex hull of an empty point set");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() <= 2) return Polygon2D{points};
    // Andrew's monotone chain; collinear points are popped (cross <= 0).
    std::vector<Point2> hull;
    for (int pass = 0; pass < 2; ++pass) {
        std::size_t base = hull.size();
        for (const auto& p : points) {
            while (hull.size() >= base + 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
            hull.push_back(p);
        }
        hull.pop_back();
        std::reverse(points.begin(), points.end());
    }
    if (hull.size() == 2 && hull[0] == hull[1]) hull.pop_back();
    // Rotate so the lowest-then-leftmost vertex comes first.
    auto first = std::min_element(hull.begin(), hull.end(), [](const Point2& a, const Point2& b) {
        return a.y < b.y || (a.y == b.y && a.x < b.x);
    });
    std::rotate(hull.begin(), first, hull.end());
    return Polygon2D{hull};
}

Cell polygon_cell(const Polygon2D& poly, Var vx, Var vy) {
    std::vector<Var> vars = sorted_vars({vx, vy});
    const auto& p = poly.vertices;
    Cell cell{vars, {}};
    if (p.size() == 1) {
        cell.cons.push_back(LinearConstraint({{vx, 1}}, Rel::Eq, p[0].x));
        cell.cons.push_back(LinearConstraint({{vy, 1}}, Rel::Eq, p[0].y));
        return cell;
    }
    if (p.size() == 2) {
        Rational a = p[1].y - p[0].y;
        Rational b = p[0].x - p[1].x;
        cell.cons.push_back(LinearConstraint({{vx, a}, {vy, b}}, Rel::Eq, a * p[0].x + b * p[0].y));
        if (p[0].x != p[1].x) {
            cell.cons.push_back(LinearConstraint({{vx, 1}}, Rel::Ge, std::min(p[0].x, p[1].x)));
            cell.cons.push_back(LinearConstraint({{vx, 1}}, Rel::Le, std::max(p[0].x, p[1].x)));
        } else {
            cell.cons.push_back(LinearConstraint({{vy, 1}}, Rel::Ge, std::min(p[0].y, p[1].y)));
            cell.cons.push_back(LinearConstraint({{vy, 1}}, Rel::Le, std::max(p[0].y, p[1].y)));
        }
        return simplify(cell);
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Point2& a = p[i];
        const Point2& b = p[(i + 1) % p.size()];
        // Interior lies to the left of a->b: cross(b-a, z-a) >= 0.
        Rational cx = -(b.y - a.y);
        Rational cy = b.x - a.x;
        cell.cons.push_back(LinearConstraint({{vx, cx}, {vy, cy}}, Rel::Ge, cx * a.x + cy * a.y));
    }
    return simplify(cell);
}

Polygon2D fmin_hull(const std::vector<Point2>& points) {
    if (points.empty()) throw DomainError("fmin_closure of an empty point set");
    std::vector<Point2> all = points;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            all.push_back({std::min(points[i].x, points[j].x), std::min(points[i].y, points[j].y)});
        }
    }
    return convex_hull_2d(std::move(all));
}

Region fmin_closure(const std::vector<Point2>& points) { return Region::single(polygon_cell(fmin_hull(points))); }

}  // namespace asv
