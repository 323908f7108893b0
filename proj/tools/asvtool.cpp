// Command-line front end for the adversarial Stackelberg value solver.
//
// Exit status: 0 success, 1 bad input or precondition, 2 size guard tripped,
// 3 internal consistency failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "asv/errors.hpp"
#include "asv/evaluate.hpp"
#include "asv/fixtures.hpp"
#include "asv/json_io.hpp"
#include "asv/robust.hpp"
#include "asv/solver.hpp"
#include "asv/witness.hpp"
#include "asv/zerosum.hpp"

namespace {

using namespace asv;

struct Options {
    std::string game;
    std::string vertex;
    std::string eps;
    bool closed = false;
    bool json = false;
    std::string c, d, target, delta, margin = "1/1000";
    std::string strategy;
    std::string output;
    std::string svg;
    std::string values;
    std::string mu, iota, mu_prime;
    std::string window = "-1,3,-1,3";
    std::string fixture;
    int samples = 20;
    int rounds = 40;
    int scc = -1;
    int granularity = 8;
    std::uint64_t seed = 1;
    bool trace = false;
    Limits limits;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const Options& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output);
    if (!out) throw DomainError("cannot write '" + o.output + "'");
    out << text;
}

Arena load(const Options& o) { return parse_game(read_file(o.game)); }

// Fixture files record the factor their weights were multiplied by in a
// "# scale N" comment; other files are unscaled.
Rational scale_of(const Options& o) {
    std::stringstream in(read_file(o.game));
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("# scale ", 0) == 0) return parse_rational(line.substr(8));
    }
    return 1;
}

void add_unscaled(const Options& o, const ExtRational& value, Json& j, std::ostream& t) {
    Rational k = scale_of(o);
    if (k == 1 || !value.finite()) return;
    Rational u = value.value() / k;
    j["scale"] = to_json(k);
    j["unscaled_value"] = to_json(u);
    t << "unscaled (/" << k << "): " << u << "\n";
}

Rational need(const std::string& text, const char* flag) {
    if (text.empty()) throw DomainError(std::string("missing --") + flag);
    return parse_rational(text);
}

EpsSpec eps_of(const Options& o) {
    if (o.closed) {
        if (!o.eps.empty()) throw DomainError("--closed and --eps are exclusive");
        return EpsSpec::closed();
    }
    return EpsSpec::fixed(need(o.eps, "eps"));
}

std::vector<long> parse_values(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        Rational r = parse_rational(item);
        if (r.get_den() != 1 || !r.get_num().fits_slong_p()) throw DomainError("partition values must be integers");
        out.push_back(r.get_num().get_si());
    }
    return out;
}

SvgWindow parse_window(const std::string& text) {
    std::vector<Rational> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
    if (v.size() != 4 || v[0] >= v[1] || v[2] >= v[3]) throw DomainError("--window wants xmin,xmax,ymin,ymax");
    return SvgWindow{v[0], v[1], v[2], v[3]};
}

std::string attained_text(bool attained) { return attained ? "attained" : "not attained"; }

void emit(const Options& o, const Json& j, const std::string& text) {
    if (o.json) write_output(o, j.dump(2) + "\n");
    else write_output(o, text);
}

// Subcommands ---------------------------------------------------------------

void cmd_solve(const Options& o) {
    Arena a = load(o);
    int v = a.index_of(o.vertex);
    AsvResult r = solve_asv(a, v, eps_of(o), o.limits);
    std::ostringstream t;
    t << r.value.str() << " (" << attained_text(r.attained) << ")\n";
    if (r.achieving_scc >= 0) t << "achieving SCC: " << r.achieving_scc << "\n";
    Json j = asv_result_to_json(r, o.trace);
    add_unscaled(o, r.value, j, t);
    emit(o, j, t.str());
}

void cmd_threshold(const Options& o) {
    Arena a = load(o);
    int v = a.index_of(o.vertex);
    ThresholdResult r = threshold(a, v, need(o.c, "c"), eps_of(o), o.limits);
    Json j = {{"decision", r.decision}, {"value", to_json(r.asv.value)}};
    if (r.certificate) j["certificate"] = certificate_to_json(a, *r.certificate);
    std::string text = std::string(r.decision ? "yes" : "no") + "\n";
    if (r.certificate) text += certificate_to_json(a, *r.certificate).dump(2) + "\n";
    emit(o, j, text);
}

void cmd_witness(const Options& o) {
    Arena a = load(o);
    int v = a.index_of(o.vertex);
    Rational c = need(o.c, "c");
    ThresholdResult r = threshold(a, v, c, eps_of(o), o.limits);
    if (!r.decision) throw DomainError("threshold does not hold: value " + r.asv.value.str() + " is not above c");
    const WitnessCertificate& cert = *r.certificate;
    Rational target = o.target.empty() ? Rational((c + cert.c_prime) / 2) : parse_rational(o.target);
    RegularWitness w = build_regular_witness(a, cert, target);
    Json j = {{"certificate", certificate_to_json(a, cert)}, {"target", to_json(target)},
              {"dominating", w.dominating}, {"lasso", lasso_to_json(a, w.lasso)}};
    std::ostringstream t;
    t << "lasso payoff (" << w.lasso.payoff0 << ", " << w.lasso.payoff1 << "), prefix " << w.lasso.prefix.size()
      << " edges, cycle " << w.lasso.cycle.size() << " edges\n";
    if (w.dominating) {
        t << "single dominating cycle\n";
    } else {
        j["n1"] = w.n1.get_str();
        j["n2"] = w.n2.get_str();
        j["doublings"] = w.doublings;
        t << "blocks n1 = " << w.n1 << ", n2 = " << w.n2 << "\n";
        if (w.closed_form && w.closed_form->ok) {
            j["k"] = to_json(w.closed_form->k);
            j["tau"] = to_json(w.closed_form->tau);
            t << "k = " << w.closed_form->k << ", tau = " << w.closed_form->tau << "\n";
        }
    }
    emit(o, j, t.str());
}

void cmd_maxeps(const Options& o) {
    Arena a = load(o);
    int v = a.index_of(o.vertex);
    Rational c = need(o.c, "c");
    MaxEpsResult m = max_epsilon(a, v, c, o.limits);
    Json j = {{"sup_eps", to_json(m.sup)}, {"attained", m.attained}};
    std::ostringstream t;
    if (m.sup.is_neg_inf()) t << "no eps > 0 works\n";
    else t << m.sup.str() << " (" << attained_text(m.attained) << ")\n";
    if (o.rounds > 0 && m.sup.finite()) {
        Rational cap = m.sup.value() * 2 + 1;
        EpsBracket b = max_epsilon_bisect(a, v, c, cap, o.rounds, o.limits);
        j["bisection"] = {{"lo", to_json(b.lo)}, {"hi", to_json(b.hi)}, {"evaluations", b.evaluations}};
        t << "bisection bracket [" << b.lo << ", " << b.hi << "]\n";
    }
    emit(o, j, t.str());
}

void cmd_mlsolve(const Options& o) {
    Arena a = load(o);
    int v = a.index_of(o.vertex);
    MemorylessValue m = asv_ml(a, v, eps_of(o), o.limits);
    Json j = {{"value", to_json(m.value)}, {"attained", m.attained}, {"strategies", m.strategies},
              {"best", strategy_to_json(a, m.best)}};
    std::ostringstream t;
    t << m.value << " over " << m.strategies << " memoryless strategies\n";
    for (const auto& [key, e] : m.best.choice) t << "  " << a.name(key.second) << " -> " << a.name(a.edge(e).dst) << "\n";
    add_unscaled(o, ExtRational(m.value), j, t);
    emit(o, j, t.str());
}

MealyStrategy load_strategy(const Options& o, const Arena& a) {
    if (o.strategy.empty()) throw DomainError("missing --strategy");
    Json j;
    try {
        j = Json::parse(read_file(o.strategy));
    } catch (const nlohmann::json::exception& ex) {
        throw DomainError(std::string("strategy file is not JSON: ") + ex.what());
    }
    return strategy_from_json(a, j);
}

void cmd_eval(const Options& o) {
    Arena a = load(o);
    int v = a.index_of(o.vertex);
    MealyStrategy s = load_strategy(o, a);
    StrategyValue r = strategy_value(a, s, v, eps_of(o), o.limits);
    Json j = {{"inf_mp0", to_json(r.inf_mp0)}, {"attained", r.attained}, {"d_star", to_json(r.d_star)}};
    std::ostringstream t;
    t << r.inf_mp0 << " (" << attained_text(r.attained) << "), best Follower payoff " << r.d_star << "\n";
    emit(o, j, t.str());
}

void cmd_robust(const Options& o) {
    Arena a = load(o);
    int v = a.index_of(o.vertex);
    MealyStrategy s = load_strategy(o, a);
    RobustnessReport r = robustness_harness(a, s, v, need(o.eps, "eps"), need(o.delta, "delta"), o.samples, o.seed,
                                            parse_rational(o.margin), o.granularity, o.limits);
    std::ostringstream t;
    t << "combined: base " << r.combined_base << ", min margin " << r.min_combined_margin << "\n";
    t << "exact responses: base " << r.exact_base << ", min margin " << r.min_exact_margin << "\n";
    t << "violations: " << r.violations << "\n";
    emit(o, robustness_to_json(r), t.str());
}

void cmd_partition(const Options& o) {
    Fixture f = make_partition_game(parse_values(o.values));
    write_output(o, "# fixture partition\n# scale " + f.scale.get_str() + "\n" + emit_game(f.arena));
}

void cmd_fixtures(const Options& o) {
    std::map<std::string, Rational> params;
    if (!o.mu.empty()) params["mu"] = parse_rational(o.mu);
    if (!o.iota.empty()) params["iota"] = parse_rational(o.iota);
    if (!o.eps.empty()) params["eps"] = parse_rational(o.eps);
    if (!o.delta.empty()) params["delta"] = parse_rational(o.delta);
    if (!o.mu_prime.empty()) params["mu_prime"] = parse_rational(o.mu_prime);
    Fixture f = fixture_by_name(o.fixture, params, o.values.empty() ? std::vector<long>{} : parse_values(o.values));
    write_output(o, "# fixture " + f.name + "\n# " + f.description + "\n# scale " + f.scale.get_str() + "\n" +
                        emit_game(f.arena));
}

void cmd_zerosum(const Options& o) {
    Arena a = load(o);
    ZsValueTable z = zs_value(a, o.limits);
    Json values = Json::object();
    std::ostringstream t;
    for (int u = 0; u < a.num_vertices(); ++u) {
        if (!o.vertex.empty() && a.name(u) != o.vertex) continue;
        values[a.name(u)] = to_json(z.value[u]);
        t << a.name(u) << " " << z.value[u] << "\n";
    }
    for (const auto* s : {&z.optimal0, &z.optimal1}) {
        for (const auto& [key, e] : s->choice) {
            t << "  player " << s->player << ": " << a.name(key.second) << " -> " << a.name(a.edge(e).dst) << "\n";
        }
    }
    emit(o, {{"values", values}, {"optimal0", strategy_to_json(a, z.optimal0)},
             {"optimal1", strategy_to_json(a, z.optimal1)}}, t.str());
}

void cmd_zscheck(const Options& o) {
    Arena a = load(o);
    int v = a.index_of(o.vertex);
    MealyStrategy s = o.strategy.empty() ? zs_value(a, o.limits).optimal0 : load_strategy(o, a);
    if (!s.memoryless()) throw DomainError("zscheck needs a memoryless strategy");
    ZsRobustnessReport r = zs_robustness_check(a, s, v, need(o.delta, "delta"), o.samples, o.seed, o.granularity);
    std::ostringstream t;
    t << "base value " << r.base_value << ", min margin " << r.min_margin << ", violations " << r.violations << "\n";
    emit(o, zs_robustness_to_json(r), t.str());
}

void cmd_badvertex(const Options& o) {
    Arena a = load(o);
    EpsSpec e = eps_of(o);
    BadnessQuery q{a.index_of(o.vertex), need(o.c, "c"), need(o.d, "d"), e.value, e.kind == EpsSpec::Kind::Fixed};
    BadnessResult r = is_bad_vertex(a, q, o.limits);
    Json j = {{"bad", r.bad}, {"strategies_checked", r.strategies_checked}};
    std::string text = r.bad ? "bad\n" : "not bad\n";
    if (r.punishing) {
        j["punishing"] = strategy_to_json(a, *r.punishing);
        for (const auto& [key, edge] : r.punishing->choice) {
            text += "  " + a.name(key.second) + " -> " + a.name(a.edge(edge).dst) + "\n";
        }
    }
    emit(o, j, text);
}

void cmd_lambda(const Options& o) {
    Arena a = load(o);
    Region r = lambda_region(a, a.index_of(o.vertex), eps_of(o), o.limits);
    if (!o.svg.empty()) {
        std::ofstream out(o.svg);
        if (!out) throw DomainError("cannot write '" + o.svg + "'");
        out << region_svg({{r, "#3060c0"}}, parse_window(o.window), "Lambda(" + o.vertex + ")");
    }
    emit(o, region_to_json(r), r.str() + "\n");
}

void cmd_extend(const Options& o) {
    Arena a = load(o);
    ExtendedArena ext = build_extended_game(a, a.index_of(o.vertex), o.limits);
    std::ostringstream t;
    t << ext.arena.num_vertices() << " vertices, " << ext.arena.num_edges() << " edges\n";
    for (int u = 0; u < ext.arena.num_vertices(); ++u) t << "  " << ext.arena.name(u) << "\n";
    emit(o, extended_to_json(a, ext), t.str());
}

void cmd_regions(const Options& o) {
    Arena a = load(o);
    EpsSpec e = eps_of(o);
    AsvResult r = solve_asv(a, a.index_of(o.vertex), e, o.limits);
    if (r.trace.empty()) throw DomainError("no non-trivial SCC is reachable");
    int pick = o.scc >= 0 ? o.scc : r.achieving_scc;
    if (pick >= static_cast<int>(r.trace.size())) throw DomainError("--scc out of range");
    const SccTrace& t = r.trace[pick];
    // Psi lives over (c, d); draw it in the (x, y) plane it is compared against.
    Region psi = rename_var(rename_var(t.psi, Var::D, Var::Y), Var::C, Var::X);
    std::string svg = region_svg({{t.phi, "#d03030"}, {psi, "#3060c0"}}, parse_window(o.window),
                                 "Phi (red) and Psi (blue)");
    if (!o.svg.empty()) {
        std::ofstream out(o.svg);
        if (!out) throw DomainError("cannot write '" + o.svg + "'");
        out << svg;
    }
    Json j = {{"scc", pick}, {"phi", region_to_json(t.phi)}, {"psi", region_to_json(t.psi)},
              {"sup", to_json(t.sup.value)}};
    emit(o, j, "phi: " + t.phi.str() + "\npsi: " + t.psi.str() + "\nsup: " + t.sup.value.str() + "\n");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Adversarial Stackelberg values of bi-weighted mean-payoff games"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub, bool needs_game = true, bool needs_vertex = true) {
        if (needs_game) sub->add_option("--game", o.game, "game file")->required();
        if (needs_vertex) sub->add_option("--vertex", o.vertex, "start vertex name")->required();
        sub->add_flag("--json", o.json, "machine-readable output");
        sub->add_option("-o,--output", o.output, "write output to a file");
        sub->add_option("--max-extended", o.limits.max_extended_vertices, "guard on extended-game vertices");
        sub->add_option("--max-cycles", o.limits.max_cycles, "guard on simple cycles per SCC");
        sub->add_option("--max-memoryless", o.limits.max_memoryless, "guard on memoryless strategies");
    };
    auto eps = [&](CLI::App* sub) {
        sub->add_option("--eps", o.eps, "tolerance p/q > 0");
        sub->add_flag("--closed", o.closed, "exact best responses instead of a tolerance");
    };

    std::vector<std::pair<CLI::App*, void (*)(const Options&)>> handlers;
    auto add = [&](const char* name, const char* help, void (*fn)(const Options&)) {
        CLI::App* sub = app.add_subcommand(name, help);
        handlers.emplace_back(sub, fn);
        return sub;
    };

    auto* solve = add("solve", "compute ASV^eps(v) or ASV(v)", cmd_solve);
    common(solve);
    eps(solve);
    solve->add_flag("--trace", o.trace, "include per-SCC regions in JSON");

    auto* thr = add("threshold", "decide ASV^eps(v) > c and print a certificate", cmd_threshold);
    common(thr);
    eps(thr);
    thr->add_option("--c", o.c, "threshold")->required();

    auto* wit = add("witness", "regular witness lasso for a true threshold", cmd_witness);
    common(wit);
    eps(wit);
    wit->add_option("--c", o.c, "threshold")->required();
    wit->add_option("--target", o.target, "Leader payoff aimed for, between c and c'");

    auto* me = add("maxeps", "largest eps keeping ASV^eps(v) > c", cmd_maxeps);
    common(me);
    me->add_option("--c", o.c, "threshold")->required();
    me->add_option("--rounds", o.rounds, "bisection rounds for the cross-check (0 disables)");

    auto* ml = add("mlsolve", "ASV restricted to memoryless Leader strategies", cmd_mlsolve);
    common(ml);
    eps(ml);

    auto* ev = add("eval", "value of a given Leader strategy", cmd_eval);
    common(ev);
    eps(ev);
    ev->add_option("--strategy", o.strategy, "strategy JSON")->required();

    auto* rb = add("robust", "robustness harness for a Leader strategy", cmd_robust);
    common(rb);
    rb->add_option("--strategy", o.strategy, "strategy JSON")->required();
    rb->add_option("--eps", o.eps, "tolerance")->required();
    rb->add_option("--delta", o.delta, "perturbation bound")->required();
    rb->add_option("--samples", o.samples, "perturbed games per check");
    rb->add_option("--seed", o.seed, "random seed");
    rb->add_option("--margin", o.margin, "slack below the base value");
    rb->add_option("--granularity", o.granularity, "perturbation grid per delta");

    auto* part = add("partition", "write the partition reduction game", cmd_partition);
    common(part, false, false);
    part->add_option("--values", o.values, "comma-separated positive integers")->required();

    auto* fx = add("fixtures", "write an example game", cmd_fixtures);
    common(fx, false, false);
    fx->add_option("name", o.fixture, "fixture name")->required();
    fx->add_option("--mu", o.mu, "loss parameter of the fragile fixtures");
    fx->add_option("--iota", o.iota, "perturbation size baked into a fixture");
    fx->add_option("--eps", o.eps, "tolerance the infmem fixture is built for");
    fx->add_option("--delta", o.delta, "imprecision bound of the imprecision fixtures");
    fx->add_option("--mu-prime", o.mu_prime, "payoff of the imprecision fixtures");
    fx->add_option("--values", o.values, "comma-separated positive integers for partition");

    auto* zs = add("zerosum", "zero-sum values on the first weight", cmd_zerosum);
    common(zs, true, false);
    zs->add_option("--vertex", o.vertex, "only print this vertex");

    auto* zc = add("zscheck", "zero-sum robustness sweep", cmd_zscheck);
    common(zc);
    zc->add_option("--strategy", o.strategy, "memoryless Leader strategy JSON (default: optimal)");
    zc->add_option("--delta", o.delta, "perturbation bound")->required();
    zc->add_option("--samples", o.samples, "perturbed games");
    zc->add_option("--seed", o.seed, "random seed");
    zc->add_option("--granularity", o.granularity, "perturbation grid per delta");

    auto* bv = add("badvertex", "is the vertex (c,d)-bad?", cmd_badvertex);
    common(bv);
    eps(bv);
    bv->add_option("--c", o.c, "bound on the Leader payoff")->required();
    bv->add_option("--d", o.d, "Follower payoff to beat")->required();

    auto* lm = add("lambda", "region of (c,d) for which the vertex is bad", cmd_lambda);
    common(lm);
    eps(lm);
    lm->add_option("--svg", o.svg, "also write an SVG picture");
    lm->add_option("--window", o.window, "xmin,xmax,ymin,ymax");

    auto* ex = add("extend", "dump the extended game", cmd_extend);
    common(ex);

    auto* rg = add("regions", "SVG of Phi and Psi for one SCC of the extended game", cmd_regions);
    common(rg);
    eps(rg);
    rg->add_option("--svg", o.svg, "SVG output path");
    rg->add_option("--scc", o.scc, "trace index (default: achieving SCC)");
    rg->add_option("--window", o.window, "xmin,xmax,ymin,ymax");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        for (auto& [sub, fn] : handlers) {
            if (sub->parsed()) fn(o);
        }
        return 0;
    } catch (const ResourceError& e) {
        if (o.json) std::cout << Json{{"error", {{"kind", "resource"}, {"message", e.what()}}}}.dump() << "\n";
        else std::cerr << "resource guard: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        if (o.json) std::cout << Json{{"error", {{"kind", "domain"}, {"message", e.what()}}}}.dump() << "\n";
        else std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
