#include "asv/simplex.hpp"

#include "asv/errors.hpp"

namespace asv {

namespace {

struct Tableau {
    std::vector<std::vector<Rational>> a;  // m rows, last column is the rhs
    std::vector<int> basis;
    int cols = 0;                          // structural + slack + artificial

    void pivot(int r, int c) {
        Rational p = a[r][c];
        for (auto& x : a[r]) x /= p;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (static_cast<int>(i) == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (int j = 0; j <= cols; ++j) a[i][j] -= f * a[r][j];
        }
        basis[r] = c;
    }

    // Maximises cost.x over columns [0, allowed). Returns false if unbounded.
    bool optimise(const std::vector<Rational>& cost, int allowed) {
        const int m = static_cast<int>(a.size());
        while (true) {
            int enter = -1;
            for (int j = 0; j < allowed && enter < 0; ++j) {
                Rational reduced = cost[j];
                for (int i = 0; i < m; ++i) reduced -= cost[basis[i]] * a[i][j];
                if (reduced > 0) enter = j;
            }
            if (enter < 0) return true;
            int leave = -1;
            Rational best;
            for (int i = 0; i < m; ++i) {
                if (a[i][enter] <= 0) continue;
                Rational ratio = a[i][cols] / a[i][enter];
                if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpSolution simplex_maximize(const LpProblem& lp) {
    const int n = lp.num_vars;
    const int m = static_cast<int>(lp.rows.size());
    int slacks = 0, artificials = 0;
    std::vector<Rel> rel = lp.rel;
    std::vector<std::vector<Rational>> rows = lp.rows;
    std::vector<Rational> rhs = lp.rhs;
    for (int i = 0; i < m; ++i) {
        if (rel[i] == Rel::Lt || rel[i] == Rel::Gt) throw DomainError("simplex handles only <=, =, >= rows");
        if (rhs[i] < 0) {
            for (auto& x : rows[i]) x = -x;
            rhs[i] = -rhs[i];
            if (rel[i] == Rel::Le) rel[i] = Rel::Ge;
            else if (rel[i] == Rel::Ge) rel[i] = Rel::Le;
        }
        if (rel[i] != Rel::Eq) ++slacks;
        if (rel[i] != Rel::Le) ++artificials;
    }
    Tableau t;
    t.cols = n + slacks + artificials;
    t.a.assign(m, std::vector<Rational>(t.cols + 1));
    t.basis.assign(m, -1);
    int s = n, art = n + slacks;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) t.a[i][j] = rows[i][j];
        t.a[i][t.cols] = rhs[i];
        if (rel[i] == Rel::Le) {
            t.a[i][s] = 1;
            t.basis[i] = s++;
        } else {
            if (rel[i] == Rel::Ge) t.a[i][s++] = -1;
            t.a[i][art] = 1;
            t.basis[i] = art++;
        }
    }

    LpSolution sol;
    const int first_art = n + slacks;
    if (artificials > 0) {
        std::vector<Rational> phase1(t.cols, 0);
        for (int j = first_art; j < t.cols; ++j) phase1[j] = -1;
        t.optimise(phase1, t.cols);
        Rational infeas = 0;
        for (int i = 0; i < m; ++i) {
            if (t.basis[i] >= first_art) infeas += t.a[i][t.cols];
        }
        if (infeas != 0) {
            sol.status = LpSolution::Status::Infeasible;
            return sol;
        }
        // Drive zero-level artificials out of the basis; drop redundant rows.
        for (int i = 0; i < static_cast<int>(t.a.size()); ++i) {
            if (t.basis[i] < first_art) continue;
            int c = -1;
            for (int j = 0; j < first_art && c < 0; ++j) {
                if (t.a[i][j] != 0) c = j;
            }
            if (c >= 0) {
                t.pivot(i, c);
            } else {
                t.a.erase(t.a.begin() + i);
                t.basis.erase(t.basis.begin() + i);
                --i;
            }
        }
    }
    std::vector<Rational> cost(t.cols, 0);
    for (int j = 0; j < n; ++j) cost[j] = lp.objective[j];
    if (!t.optimise(cost, first_art)) {
        sol.status = LpSolution::Status::Unbounded;
        return sol;
    }
    sol.status = LpSolution::Status::Optimal;
    sol.x.assign(n, 0);
    for (std::size_t i = 0; i < t.a.size(); ++i) {
        if (t.basis[i] < n) sol.x[t.basis[i]] = t.a[i][t.cols];
    }
    sol.value = 0;
    for (int j = 0; j < n; ++j) sol.value += lp.objective[j] * sol.x[j];
    return sol;
}

}  // namespace asv
