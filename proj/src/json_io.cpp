#include "asv/json_io.hpp"

#include "asv/errors.hpp"

namespace asv {

Json to_json(const Rational& r) { return to_string(r); }
Json to_json(const ExtRational& r) { return r.str(); }

Json arena_to_json(const Arena& arena) {
    Json vs = Json::array(), es = Json::array();
    for (const auto& v : arena.vertices()) vs.push_back({{"name", v.name}, {"owner", v.owner}});
    for (int e = 0; e < arena.num_edges(); ++e) {
        const Edge& ed = arena.edge(e);
        es.push_back({{"src", arena.name(ed.src)}, {"dst", arena.name(ed.dst)},
                      {"w0", to_json(ed.w0)}, {"w1", to_json(ed.w1)}});
    }
    return {{"vertices", vs}, {"edges", es}};
}

Json region_to_json(const Region& region) {
    Json vars = Json::array(), cells = Json::array();
    for (Var v : region.vars) vars.push_back(var_name(v));
    for (const auto& cell : region.cells) {
        Json cons = Json::array();
        for (const auto& k : cell.cons) {
            Json coef = Json::object();
            for (Var v : region.vars) {
                if (k[v] != 0) coef[var_name(v)] = to_json(k[v]);
            }
            cons.push_back({{"coef", coef}, {"rel", rel_name(k.rel)}, {"rhs", to_json(k.rhs)}});
        }
        cells.push_back(cons);
    }
    return {{"vars", vars}, {"cells", cells}, {"text", region.str()}};
}

Json edges_to_json(const Arena& arena, const std::vector<int>& edges) {
    Json out = Json::array();
    for (int e : edges) {
        const Edge& ed = arena.edge(e);
        out.push_back({{"edge", e}, {"src", arena.name(ed.src)}, {"dst", arena.name(ed.dst)}});
    }
    return out;
}

Json lasso_to_json(const Arena& arena, const Lasso& lasso) {
    return {{"start", arena.name(lasso.start)},
            {"prefix", edges_to_json(arena, lasso.prefix)},
            {"cycle_length", lasso.cycle.size()},
            {"cycle", edges_to_json(arena, lasso.cycle)},
            {"payoff0", to_json(lasso.payoff0)},
            {"payoff1", to_json(lasso.payoff1)}};
}

Json strategy_to_json(const Arena& arena, const MealyStrategy& s) {
    auto state = [&](int i) {
        return i < static_cast<int>(s.state_names.size()) ? s.state_names[i] : "s" + std::to_string(i);
    };
    Json states = Json::array(), transitions = Json::array(), choices = Json::array();
    for (int i = 0; i < s.num_states; ++i) states.push_back(state(i));
    for (const auto& [key, next] : s.transition) {
        transitions.push_back({{"state", state(key.first)}, {"vertex", arena.name(key.second)}, {"next", state(next)}});
    }
    for (const auto& [key, e] : s.choice) {
        choices.push_back({{"state", state(key.first)}, {"vertex", arena.name(key.second)}, {"edge", e},
                           {"to", arena.name(arena.edge(e).dst)}});
    }
    return {{"player", s.player}, {"states", states}, {"initial", state(s.initial)},
            {"transitions", transitions}, {"choices", choices}};
}

MealyStrategy strategy_from_json(const Arena& arena, const Json& j) {
    try {
        MealyStrategy s;
        s.player = j.value("player", 0);
        if (s.player != 0 && s.player != 1) throw DomainError("player must be 0 or 1");
        std::map<std::string, int> index;
        for (const auto& name : j.at("states")) {
            std::string n = name.get<std::string>();
            if (!index.emplace(n, static_cast<int>(s.state_names.size())).second) {
                throw DomainError("duplicate state '" + n + "'");
            }
            s.state_names.push_back(n);
        }
        if (s.state_names.empty()) throw DomainError("strategy needs at least one state");
        s.num_states = static_cast<int>(s.state_names.size());
        auto lookup = [&](const Json& name) {
            auto it = index.find(name.get<std::string>());
            if (it == index.end()) throw DomainError("unknown state '" + name.get<std::string>() + "'");
            return it->second;
        };
        s.initial = j.contains("initial") ? lookup(j.at("initial")) : 0;
        for (const auto& t : j.value("transitions", Json::array())) {
            s.transition[{lookup(t.at("state")), arena.index_of(t.at("vertex").get<std::string>())}] =
                lookup(t.at("next"));
        }
        for (const auto& c : j.value("choices", Json::array())) {
            int st = lookup(c.at("state"));
            int v = arena.index_of(c.at("vertex").get<std::string>());
            if (arena.owner(v) != s.player) throw DomainError("choice at a vertex the player does not own");
            int e = -1;
            if (c.contains("edge")) {
                e = c.at("edge").get<int>();
                if (e < 0 || e >= arena.num_edges() || arena.edge(e).src != v) {
                    throw DomainError("choice edge " + std::to_string(e) + " does not leave '" + arena.name(v) + "'");
                }
            } else {
                int to = arena.index_of(c.at("to").get<std::string>());
                for (int out : arena.out_edges(v)) {
                    if (arena.edge(out).dst != to) continue;
                    if (e >= 0) throw DomainError("ambiguous choice target (parallel edges); give \"edge\"");
                    e = out;
                }
                if (e < 0) throw DomainError("no edge from '" + arena.name(v) + "' to '" + arena.name(to) + "'");
            }
            s.choice[{st, v}] = e;
        }
        return s;
    } catch (const nlohmann::json::exception& ex) {
        throw DomainError(std::string("malformed strategy JSON: ") + ex.what());
    }
}

Json certificate_to_json(const Arena& arena, const WitnessCertificate& cert) {
    Json punishing = Json::object();
    for (const auto& [u, s] : cert.punishing) {
        Json choice = Json::object();
        for (const auto& [key, e] : s.choice) choice[arena.name(key.second)] = arena.name(arena.edge(e).dst);
        punishing[arena.name(u)] = choice;
    }
    Json eps = cert.eps.kind == EpsSpec::Kind::Closed ? Json("closed") : to_json(cert.eps.value);
    return {{"vertex", arena.name(cert.vertex)},
            {"c", to_json(cert.c)},
            {"c_slack", to_json(cert.c_slack)},
            {"eps", eps},
            {"pi1", edges_to_json(arena, cert.pi1)},
            {"pi2", edges_to_json(arena, cert.pi2)},
            {"pi3", edges_to_json(arena, cert.pi3)},
            {"l1", edges_to_json(arena, cert.l1)},
            {"l2", edges_to_json(arena, cert.l2)},
            {"alpha", to_json(cert.alpha)},
            {"beta", to_json(cert.beta)},
            {"c_prime", to_json(cert.c_prime)},
            {"d", to_json(cert.d)},
            {"punishing", punishing}};
}

Json asv_result_to_json(const AsvResult& r, bool with_trace) {
    Json out = {{"value", to_json(r.value)}, {"attained", r.attained}, {"achieving_scc", r.achieving_scc},
                {"extended_vertices", r.ext.arena.num_vertices()}};
    if (with_trace) {
        Json trace = Json::array();
        for (const auto& t : r.trace) {
            Json verts = Json::array();
            for (int u : t.ext_vertices) verts.push_back(r.ext.arena.name(u));
            trace.push_back({{"scc", t.scc},
                             {"vertices", verts},
                             {"phi", region_to_json(t.phi)},
                             {"psi", region_to_json(t.psi)},
                             {"sup", to_json(t.sup.value)},
                             {"sup_attained", t.sup.attained}});
        }
        out["trace"] = trace;
    }
    return out;
}

Json extended_to_json(const Arena& base, const ExtendedArena& ext) {
    Json vs = Json::array();
    for (int u = 0; u < ext.arena.num_vertices(); ++u) {
        Json visited = Json::array();
        for (int b : ext.visited[u]) visited.push_back(base.name(b));
        vs.push_back({{"v", base.name(ext.base_vertex[u])}, {"P", visited}, {"owner", ext.arena.owner(u)}});
    }
    Json es = Json::array(), base_edges = Json::array();
    for (int e = 0; e < ext.arena.num_edges(); ++e) {
        es.push_back(Json::array({ext.arena.edge(e).src, ext.arena.edge(e).dst}));
        base_edges.push_back(ext.base_edge[e]);
    }
    return {{"vertices", vs}, {"edges", es}, {"base_edges", base_edges}};
}

namespace {

Json samples_to_json(const std::vector<RobustSample>& samples) {
    Json out = Json::array();
    for (const auto& s : samples) {
        out.push_back({{"seed", s.seed}, {"value", to_json(s.value)}, {"margin", to_json(s.margin)},
                       {"verdict", s.ok ? "ok" : "violation"}});
    }
    return out;
}

}  // namespace

Json robustness_to_json(const RobustnessReport& r) {
    return {{"eps", to_json(r.eps)},
            {"delta", to_json(r.delta)},
            {"margin", to_json(r.margin)},
            {"combined_base", to_json(r.combined_base)},
            {"exact_base", to_json(r.exact_base)},
            {"min_combined_margin", to_json(r.min_combined_margin)},
            {"min_exact_margin", to_json(r.min_exact_margin)},
            {"violations", r.violations},
            {"combined", samples_to_json(r.combined)},
            {"exact", samples_to_json(r.exact)}};
}

Json zs_robustness_to_json(const ZsRobustnessReport& r) {
    Json samples = Json::array();
    for (std::size_t i = 0; i < r.seeds.size(); ++i) {
        samples.push_back({{"seed", r.seeds[i]}, {"value", to_json(r.sample_values[i])}});
    }
    return {{"base_value", to_json(r.base_value)}, {"min_margin", to_json(r.min_margin)},
            {"violations", r.violations}, {"samples", samples}};
}

}  // namespace asv
