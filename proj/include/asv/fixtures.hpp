#pragma once

#include <map>
#include <string>
#include <vector>

#include "asv/arena.hpp"

namespace asv {

// A named example game. Game files only carry integers, so parametric weights
// are multiplied by `scale` (the lcm of their denominators, or the fixed
// factor stated by the generator). Payoff-valued answers and eps must be
// multiplied by the same factor when queried on the scaled game.
struct Fixture {
    std::string name;
    Arena arena;
    Integer scale = 1;
    std::string description;
};

// Rooted at v0 (Leader): L leads to a Follower choice between (10,10) and
// (0,9); R to a choice between (8,9) and (4,5).
Fixture fixture_fig1();
// Follower at v0 picks between a loop (-2mu, 1 - iota/2) and a loop (0, 1).
Fixture fixture_fragile(const Rational& mu, const Rational& iota);
// The same game after perturbing the left loop to (-2mu, 1).
Fixture fixture_fragile_perturbed(const Rational& mu);
// Follower-only game with a loop (mu', 2 delta) at v1 and a (0,0) loop at v2.
Fixture fixture_model_imprecision(const Rational& mu_prime, const Rational& delta);
// One member of its delta-band: (mu' - iota, 2 delta - iota) and (iota, iota).
Fixture fixture_model_imprecision_perturbed(const Rational& mu_prime, const Rational& delta, const Rational& iota);
// Leader needs finite (not memoryless) memory; ASV^eps(v0) = 1 - eps.
Fixture fixture_finmem();
// Leader needs infinite memory; the v1 loop carries (0, 2 + 2 eps).
Fixture fixture_infmem(const Rational& eps);
// No finite-memory eps-best response exists for the Follower.
Fixture fixture_no_finite_response();
// Partition reduction, weights multiplied by 2n so the v' loop
// (0, (T - 1/2)/n) becomes (0, sum - 1). Requires a non-empty list of
// positive integers.
Fixture make_partition_game(const std::vector<long>& values);

// Lookup used by the command-line tool. `params` holds rationals such as
// mu, iota, eps, delta, mu_prime; `values` feeds the partition generator.
Fixture fixture_by_name(const std::string& name, const std::map<std::string, Rational>& params,
                        const std::vector<long>& values);
std::vector<std::string> fixture_names();

}  // namespace asv
