#pragma once

#include <vector>

#include "asv/geometry.hpp"

namespace asv {

// max objective.x  subject to  rows[i].x (rel[i]) rhs[i],  x >= 0.
struct LpProblem {
    int num_vars = 0;
    std::vector<std::vector<Rational>> rows;
    std::vector<Rel> rel;  // Le, Eq or Ge
    std::vector<Rational> rhs;
    std::vector<Rational> objective;
};

struct LpSolution {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status = Status::Infeasible;
    Rational value;
    std::vector<Rational> x;
};

// Dense two-phase simplex with Bland's rule, exact over the rationals.
LpSolution simplex_maximize(const LpProblem& lp);

}  // namespace asv
