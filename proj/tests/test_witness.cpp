#include <doctest.h>

#include "asv/evaluate.hpp"
#include "asv/fixtures.hpp"
#include "asv/witness.hpp"
#include "support.hpp"

using namespace asv;

namespace {

TradeOffData two_loops() {
    TradeOffData t;
    t.w0_l1 = 2;
    t.w1_l1 = 0;
    t.len_l1 = 1;
    t.w0_l2 = 0;
    t.w1_l2 = 2;
    t.len_l2 = 1;
    t.alpha = Rational(1, 2);
    t.beta = Rational(1, 2);
    t.v = 2;
    t.z0 = 0;
    t.z1 = 0;
    t.c_target = Rational(9, 10);
    t.d = 1;
    return t;
}

// Certificate-to-strategy pipeline; returns the witness for further checks.
RegularWitness check_pipeline(const Arena& a, int v, const Rational& c, const EpsSpec& spec) {
    ThresholdResult t = threshold(a, v, c, spec);
    REQUIRE(t.decision);
    REQUIRE(t.certificate);
    const WitnessCertificate& cert = *t.certificate;
    CHECK(verify_certificate(a, cert).ok);
    Rational target = (c + cert.c_prime) / 2;
    RegularWitness w = build_regular_witness(a, cert, target);
    CHECK(w.lasso.payoff0 > c);
    CHECK(w.lasso.payoff1 >= cert.d);
    MealyStrategy s = witness_strategy(a, cert, w);
    StrategyValue sv = strategy_value(a, s, v, spec);
    CHECK(sv.inf_mp0 > c);
    return w;
}

}  // namespace

TEST_CASE("closed-form repetition counts on the two-loop trade-off") {
    TradeOffData t = two_loops();
    KTau k = closed_form_k_tau(t);
    REQUIRE(k.ok);
    CHECK(k.k == 36);
    CHECK(k.tau == 4);
    CHECK(k.n1 == 18);
    CHECK(k.n2 == 20);
    auto [p0, p1] = block_payoffs(t, k.n1, k.n2);
    CHECK(p0 == Rational(9, 10));
    CHECK(p1 == 1);
    KTau lit = uncorrected_k_tau(t);
    CHECK(lit.k == k.k);
    CHECK(lit.tau == k.tau);
}

TEST_CASE("closed form hits the target exactly on synthetic trade-offs") {
    std::mt19937_64 rng(61);
    int solved = 0, literal = 0;
    for (int it = 0; it < 200; ++it) {
        TradeOffData t;
        std::uniform_int_distribution<int> len(1, 4), w(-6, 6), path(1, 3);
        t.len_l1 = len(rng);
        t.len_l2 = len(rng);
        t.w0_l1 = w(rng);
        t.w1_l1 = w(rng);
        t.w0_l2 = w(rng);
        t.w1_l2 = w(rng);
        t.alpha = testing::random_rational(rng, 0, 1, 8);
        if (t.alpha == 0) t.alpha = Rational(1, 8);
        t.beta = 1 - t.alpha;
        t.v = path(rng);
        t.z0 = w(rng);
        t.z1 = w(rng);
        Rational cp = t.alpha * t.w0_l1 / t.len_l1 + t.beta * t.w0_l2 / t.len_l2;
        t.d = t.alpha * t.w1_l1 / t.len_l1 + t.beta * t.w1_l2 / t.len_l2;
        t.c_target = cp - testing::random_rational(rng, 0, 1, 16) - Rational(1, 32);
        KTau k = closed_form_k_tau(t);
        if (!k.ok) continue;
        ++solved;
        auto [p0, p1] = block_payoffs(t, k.n1, k.n2);
        CHECK(p0 == t.c_target);
        CHECK(p1 == t.d);
        KTau lit = uncorrected_k_tau(t);
        if (t.len_l1 == 1 && t.len_l2 == 1 && lit.ok) {
            ++literal;
            CHECK(lit.k == k.k);
            CHECK(lit.tau == k.tau);
        }
    }
    CHECK(solved >= 10);
    CHECK(literal > 0);
}

TEST_CASE("dominating cycle needs no trade-off") {
    Arena a = parse_game("vertex a 0\nvertex b 1\nedge a a 3 3\nedge a b 0 0\nedge b b 0 0\n");
    RegularWitness w = check_pipeline(a, 0, 2, EpsSpec::fixed(Rational(1, 2)));
    CHECK(w.dominating);
}

TEST_CASE("witness pipeline on the worked examples") {
    check_pipeline(fixture_finmem().arena, 0, Rational(1, 2), EpsSpec::fixed(Rational(1, 4)));
    Fixture fig1 = fixture_fig1();
    check_pipeline(fig1.arena, 0, 9, EpsSpec::closed());
    check_pipeline(fig1.arena, 0, 7, EpsSpec::fixed(Rational(6, 5)));
    check_pipeline(fig1.arena, 0, 9, EpsSpec::fixed(Rational(1, 2)));
    Fixture inf = fixture_infmem(Rational(1, 4));
    RegularWitness w = check_pipeline(inf.arena, 0, Rational(3, 2), EpsSpec::fixed(Rational(1, 2)));
    CHECK_FALSE(w.dominating);
}

TEST_CASE("false thresholds carry no certificate") {
    ThresholdResult t = threshold(fixture_finmem().arena, 0, Rational(3, 4), EpsSpec::fixed(Rational(1, 4)));
    CHECK_FALSE(t.decision);
    CHECK_FALSE(t.certificate);
}

TEST_CASE("tampered certificates are rejected") {
    Fixture f = fixture_infmem(Rational(1, 4));
    ThresholdResult t = threshold(f.arena, 0, Rational(3, 2), EpsSpec::fixed(Rational(1, 2)));
    REQUIRE(t.certificate);
    const WitnessCertificate good = *t.certificate;
    REQUIRE(verify_certificate(f.arena, good).ok);

    auto rejects = [&](WitnessCertificate bad, const char* what) {
        CertificateCheck r = verify_certificate(f.arena, bad);
        CHECK_MESSAGE(!r.ok, what);
    };
    WitnessCertificate c = good;
    c.alpha += Rational(1, 7);
    rejects(c, "alpha");
    c = good;
    c.c_prime += 1;
    rejects(c, "c_prime");
    c = good;
    c.d -= 1;
    rejects(c, "d");
    c = good;
    c.c_slack = c.c;
    rejects(c, "c_slack");
    c = good;
    c.l1.push_back(c.l1.front());
    rejects(c, "l1 repeated");
    c = good;
    c.punishing.clear();
    rejects(c, "punishing");
    c = good;
    c.c = c.c_prime + 1;
    c.c_slack = c.c_prime;
    rejects(c, "threshold above the payoff");
}

TEST_CASE("finite memory suffices on random games") {
    std::mt19937_64 rng(62);
    int checked = 0;
    for (int it = 0; it < 40; ++it) {
        Arena a = testing::random_arena(rng);
        EpsSpec spec = it % 2 ? EpsSpec::closed() : EpsSpec::fixed(Rational(1, 2));
        ExtRational val = solve_asv(a, 0, spec).value;
        if (!val.finite()) continue;
        // Just below the value, and somewhere well below it.
        for (Rational c : {Rational(val.value() - Rational(1, 64)), Rational(val.value() - 2)}) {
            check_pipeline(a, 0, c, spec);
            ++checked;
        }
    }
    CHECK(checked > 40);
}

TEST_CASE("witness construction rejects targets outside the open interval") {
    Fixture f = fixture_finmem();
    ThresholdResult t = threshold(f.arena, 0, Rational(1, 2), EpsSpec::fixed(Rational(1, 4)));
    REQUIRE(t.certificate);
    CHECK_THROWS_AS(build_regular_witness(f.arena, *t.certificate, t.certificate->c), DomainError);
    CHECK_THROWS_AS(build_regular_witness(f.arena, *t.certificate, t.certificate->c_prime), DomainError);
}
