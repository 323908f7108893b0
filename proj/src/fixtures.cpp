#include "asv/fixtures.hpp"

#include <tuple>

#include "asv/errors.hpp"

namespace asv {

namespace {

using Spec = std::tuple<std::string, std::string, Rational, Rational>;

Fixture build(std::string name, std::string description, const std::vector<std::pair<std::string, int>>& vertices,
              const std::vector<Spec>& edges, Integer scale = 0) {
    if (scale == 0) {
        scale = 1;
        for (const auto& e : edges) {
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), std::get<2>(e).get_den_mpz_t());
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), std::get<3>(e).get_den_mpz_t());
        }
    }
    std::vector<Vertex> vs;
    for (const auto& [n, o] : vertices) vs.push_back({n, o});
    std::vector<Edge> es;
    auto find = [&](const std::string& n) {
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (vertices[i].first == n) return static_cast<int>(i);
        }
        throw std::logic_error("fixture references unknown vertex " + n);
    };
    for (const auto& [s, d, w0, w1] : edges) {
        Rational a = w0 * scale, b = w1 * scale;
        if (a.get_den() != 1 || b.get_den() != 1) throw std::logic_error("fixture scale leaves a fraction");
        es.push_back({find(s), find(d), a, b});
    }
    return Fixture{std::move(name), Arena(std::move(vs), std::move(es)), scale, std::move(description)};
}

void require_positive(const Rational& x, const char* what) {
    if (x <= 0) throw DomainError(std::string(what) + " must be > 0");
}

}  // namespace

Fixture fixture_fig1() {
    return build("fig1", "Leader at v0 chooses L or R; fragile vs eps-robust choice",
                 {{"v0", 0}, {"v1", 1}, {"v2", 1}, {"v3", 0}, {"v4", 0}, {"v5", 0}, {"v6", 0}},
                 {{"v0", "v1", 0, 0},
                  {"v0", "v2", 0, 0},
                  {"v1", "v3", 0, 0},
                  {"v1", "v4", 0, 0},
                  {"v2", "v5", 0, 0},
                  {"v2", "v6", 0, 0},
                  {"v3", "v3", 10, 10},
                  {"v4", "v4", 0, 9},
                  {"v5", "v5", 8, 9},
                  {"v6", "v6", 4, 5}});
}

Fixture fixture_fragile(const Rational& mu, const Rational& iota) {
    require_positive(mu, "mu");
    require_positive(iota, "iota");
    return build("fragile", "Follower picks (-2mu, 1 - iota/2) on the left or (0, 1) on the right",
                 {{"v0", 1}, {"v1", 0}, {"v2", 0}},
                 {{"v0", "v1", 0, 0},
                  {"v0", "v2", 0, 0},
                  {"v1", "v1", -2 * mu, 1 - iota / 2},
                  {"v2", "v2", 0, 1}});
}

Fixture fixture_fragile_perturbed(const Rational& mu) {
    require_positive(mu, "mu");
    return build("fragile-perturbed", "Left loop raised to (-2mu, 1): both loops are best responses",
                 {{"v0", 1}, {"v1", 0}, {"v2", 0}},
                 {{"v0", "v1", 0, 0}, {"v0", "v2", 0, 0}, {"v1", "v1", -2 * mu, 1}, {"v2", "v2", 0, 1}});
}

Fixture fixture_model_imprecision(const Rational& mu_prime, const Rational& delta) {
    require_positive(delta, "delta");
    return build("imprecision", "Follower-only game; loop (mu', 2 delta) at v1, (0,0) at v2",
                 {{"v1", 1}, {"v2", 1}},
                 {{"v1", "v1", mu_prime, 2 * delta}, {"v1", "v2", 0, 0}, {"v2", "v2", 0, 0}, {"v2", "v1", 0, 0}});
}

Fixture fixture_model_imprecision_perturbed(const Rational& mu_prime, const Rational& delta, const Rational& iota) {
    require_positive(delta, "delta");
    if (iota <= 0 || iota >= delta) throw DomainError("iota must lie strictly between 0 and delta");
    return build("imprecision-perturbed", "Member of the delta band of the imprecision game",
                 {{"v1", 1}, {"v2", 1}},
                 {{"v1", "v1", mu_prime - iota, 2 * delta - iota},
                  {"v1", "v2", 0, 0},
                  {"v2", "v2", iota, iota},
                  {"v2", "v1", 0, 0}});
}

Fixture fixture_finmem() {
    return build("finmem", "ASV^eps(v0) = 1 - eps, reached by a finite-memory Leader strategy",
                 {{"v0", 1}, {"v1", 0}, {"v2", 0}},
                 {{"v0", "v1", 1, 1}, {"v0", "v2", 0, 1}, {"v1", "v1", 0, 2}, {"v1", "v0", 1, 1}, {"v2", "v2", 0, 1}});
}

Fixture fixture_infmem(const Rational& eps) {
    require_positive(eps, "eps");
    return build("infmem", "ASV^eps(v0) = 1 but only infinite memory reaches it",
                 {{"v0", 1}, {"v1", 0}, {"v2", 0}},
                 {{"v0", "v0", 2, 0},
                  {"v0", "v1", 0, 0},
                  {"v0", "v2", 0, 1},
                  {"v1", "v1", 0, 2 + 2 * eps},
                  {"v1", "v0", 0, 0},
                  {"v2", "v2", 0, 1}});
}

Fixture fixture_no_finite_response() {
    return build("noresponse", "Some Leader strategy admits no finite-memory eps-best response",
                 {{"v0", 0}, {"v1", 1}, {"v2", 0}},
                 {{"v0", "v0", 0, 3},
                  {"v0", "v1", 0, 0},
                  {"v0", "v2", 0, 0},
                  {"v1", "v1", 3, 0},
                  {"v1", "v0", 0, 0},
                  {"v2", "v2", 1, 0}});
}

Fixture make_partition_game(const std::vector<long>& values) {
    if (values.empty()) throw DomainError("partition values must be non-empty");
    Rational sum = 0;
    for (long a : values) {
        if (a <= 0) throw DomainError("partition values must be positive");
        sum += a;
    }
    const long n = static_cast<long>(values.size());
    std::vector<std::pair<std::string, int>> vs{{"v0", 1}};
    for (long i = 1; i <= n; ++i) vs.emplace_back("v" + std::to_string(i), 0);
    vs.emplace_back("vp", 0);
    std::vector<Spec> es{{"v0", "v1", 0, 0}, {"v0", "vp", 0, 0}};
    for (long i = 1; i <= n; ++i) {
        std::string src = "v" + std::to_string(i), dst = "v" + std::to_string(i == n ? 1 : i + 1);
        Rational a = values[i - 1];
        es.emplace_back(src, dst, a, 0);
        es.emplace_back(src, dst, 0, a);
    }
    Rational t = sum / 2;
    es.emplace_back("vp", "vp", 0, (t - Rational(1, 2)) / n);
    return build("partition", "Memoryless-threshold reduction from partition", vs, es, Integer(2 * n));
}

Fixture fixture_by_name(const std::string& name, const std::map<std::string, Rational>& params,
                        const std::vector<long>& values) {
    auto get = [&](const char* key) {
        auto it = params.find(key);
        if (it == params.end()) throw DomainError(std::string("fixture '") + name + "' needs --" + key);
        return it->second;
    };
    if (name == "fig1") return fixture_fig1();
    if (name == "fragile") return fixture_fragile(get("mu"), get("iota"));
    if (name == "fragile-perturbed") return fixture_fragile_perturbed(get("mu"));
    if (name == "imprecision") return fixture_model_imprecision(get("mu_prime"), get("delta"));
    if (name == "imprecision-perturbed") {
        return fixture_model_imprecision_perturbed(get("mu_prime"), get("delta"), get("iota"));
    }
    if (name == "finmem") return fixture_finmem();
    if (name == "infmem") return fixture_infmem(get("eps"));
    if (name == "noresponse") return fixture_no_finite_response();
    if (name == "partition") return make_partition_game(values);
    throw DomainError("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() {
    return {"fig1", "fragile", "fragile-perturbed", "imprecision", "imprecision-perturbed",
            "finmem", "infmem", "noresponse", "partition"};
}

}  // namespace asv
