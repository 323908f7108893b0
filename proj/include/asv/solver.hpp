#pragma once

#include <vector>

#include "asv/extended.hpp"
#include "asv/geometry.hpp"
#include "asv/graph.hpp"
#include "asv/lambda.hpp"

namespace asv {

// Audit record for one non-trivial SCC of the extended game.
struct SccTrace {
    int scc = 0;                     // index into the extended game's SCC list
    std::vector<int> ext_vertices;
    std::vector<int> visited;        // V*(S), base vertices
    std::vector<Point2> cycle_points;
    Region phi;                      // F_min(CH(cycles)) over {x, y}
    Region psi;                      // union of Lambda(u), u in V*(S), over {c, d}
    Region rho;                      // x > c, Phi(x,y), not Psi(c,y) over {x, y, c}
    SupResult sup;                   // sup of c over rho
};

struct AsvResult {
    ExtRational value;               // -inf when no non-trivial SCC exists
    bool attained = false;
    int achieving_scc = -1;          // index into trace
    ExtendedArena ext;
    std::vector<SccTrace> trace;
};

Region phi_region(const ExtendedArena& ext, const SccRecord& scc, const Limits& limits = {});
Region psi_region(const ExtendedArena& ext, const SccRecord& scc, LambdaOracle& oracle);

// ASV^eps(v) (eps > 0) or, with EpsSpec::closed(), ASV(v).
AsvResult solve_asv(const Arena& arena, int v, const EpsSpec& eps, const Limits& limits = {});
AsvResult asv_epsilon(const Arena& arena, int v, const Rational& eps, const Limits& limits = {});
AsvResult asv_value(const Arena& arena, int v, const Limits& limits = {});

struct MaxEpsResult {
    ExtRational sup;                 // -inf: no eps > 0 gives ASV^eps(v) > c
    bool attained = false;
    int achieving_scc = -1;
};

// Largest eps with ASV^eps(v) > c, via the region pipeline with eps kept as a
// variable.
MaxEpsResult max_epsilon(const Arena& arena, int v, const Rational& c, const Limits& limits = {});

struct EpsBracket {
    Rational lo;                     // ASV^lo(v) > c (or lo = 0 if none found)
    Rational hi;                     // ASV^hi(v) <= c (or the search cap)
    bool hi_found = false;
    int evaluations = 0;
};

// Independent route: bisection on eps using asv_epsilon only.
EpsBracket max_epsilon_bisect(const Arena& arena, int v, const Rational& c, const Rational& cap, int rounds,
                              const Limits& limits = {});

}  // namespace asv
