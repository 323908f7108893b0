#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asv/lasso.hpp"
#include "asv/solver.hpp"
#include "asv/strategy.hpp"

namespace asv {

// Finite evidence that ASV^eps(v) > c: a play pi1 (l1^a pi2 l2^b pi3)^omega
// whose limit payoff (c_prime, d) combines two simple cycles, none of whose
// vertices is (c_slack, d)-bad. All paths and cycles are base-arena edges.
struct WitnessCertificate {
    int vertex = 0;
    Rational c;
    // Strictly between c and c_prime. Badness is excluded at this threshold so
    // that every punished deviation leaves the Leader strictly above c.
    Rational c_slack;
    EpsSpec eps;
    std::vector<int> pi1, pi2, pi3;
    std::vector<int> l1, l2;
    Rational alpha, beta;
    Rational c_prime, d;
    std::map<int, MealyStrategy> punishing;  // memoryless, keyed by vertex
};

struct ThresholdResult {
    bool decision = false;
    AsvResult asv;
    std::optional<WitnessCertificate> certificate;
};

// Decides ASV^eps(v) > c (strictly). When true, a certificate is extracted
// and re-verified; a certificate that fails verification is a solver bug and
// raises std::logic_error.
ThresholdResult threshold(const Arena& arena, int v, const Rational& c, const EpsSpec& eps, const Limits& limits = {});

struct CertificateCheck {
    bool ok = true;
    std::string reason;
};

CertificateCheck verify_certificate(const Arena& arena, const WitnessCertificate& cert, const Limits& limits = {});

// Totals of the two cycles and the connecting detours of a trade-off witness,
// with l1 the cycle that is better for the Leader and l2 the one better for
// the Follower.
struct TradeOffData {
    Rational w0_l1, w1_l1, len_l1;
    Rational w0_l2, w1_l2, len_l2;
    Rational alpha, beta;
    Rational v;       // |pi2| + |pi3|
    Rational z0, z1;  // weights of pi2 + pi3
    Rational c_target;
    Rational d;
};

// Real-valued repetition counts n1 = a k, n2 = b k + u (a = alpha/|l1|,
// b = beta/|l2|) that make the block mean exactly (c_target, d).
struct KTau {
    bool ok = false;  // false when the 2x2 system is singular
    Rational k, u, tau;
    Rational n1, n2;
};

KTau closed_form_k_tau(const TradeOffData& t);
// The uncorrected expressions, which take cycle weights as totals and alpha,
// beta as repetition weights. Kept for comparison only: where it is defined
// (beta > 0 and w1(l2) != d) it agrees with closed_form_k_tau on self-loops.
KTau uncorrected_k_tau(const TradeOffData& t);
// Mean payoff of (l1^n1 pi2 l2^n2 pi3)^omega for real-valued counts.
std::pair<Rational, Rational> block_payoffs(const TradeOffData& t, const Rational& n1, const Rational& n2);

struct RegularWitness {
    Lasso lasso;
    bool dominating = false;  // one cycle alone suffices
    Integer n1 = 0, n2 = 0;   // block counts (trade-off case)
    std::optional<TradeOffData> data;
    std::optional<KTau> closed_form;
    Rational c_target;
    int doublings = 0;        // times k was doubled to absorb rounding
};

// Builds a lasso with payoff0 > cert.c and payoff1 >= cert.d. c_target must
// satisfy cert.c < c_target < cert.c_prime.
RegularWitness build_regular_witness(const Arena& arena, const WitnessCertificate& cert, const Rational& c_target,
                                     std::size_t max_cycle_length = 1000000);

// Follows the lasso; when the Follower leaves it from vertex w, switches for
// good to the punishing strategy stored for w.
MealyStrategy witness_strategy(const Arena& arena, const WitnessCertificate& cert, const RegularWitness& witness);

}  // namespace asv
