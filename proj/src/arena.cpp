#include "asv/arena.hpp"

#include <map>
#include <sstream>

#include "asv/errors.hpp"

namespace asv {

Arena::Arena(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), out_(vertices_.size()), max_abs_(0) {
    std::map<std::string, int> seen;
    for (int v = 0; v < num_vertices(); ++v) {
        const auto& vx = vertices_[v];
        if (vx.owner != 0 && vx.owner != 1) throw DomainError("vertex '" + vx.name + "': owner must be 0 or 1");
        if (!seen.emplace(vx.name, v).second) throw DomainError("duplicate vertex name '" + vx.name + "'");
    }
    for (int e = 0; e < num_edges(); ++e) {
        const auto& ed = edges_[e];
        if (ed.src < 0 || ed.src >= num_vertices() || ed.dst < 0 || ed.dst >= num_vertices()) {
            throw DomainError("edge " + std::to_string(e) + " has a dangling endpoint");
        }
        out_[ed.src].push_back(e);
        for (const Rational* w : {&ed.w0, &ed.w1}) {
            Rational a = abs_of(*w);
            if (a > max_abs_) max_abs_ = a;
        }
    }
    for (int v = 0; v < num_vertices(); ++v) {
        if (out_[v].empty()) throw DomainError("vertex with no outgoing edge: '" + vertices_[v].name + "'");
    }
}

std::optional<int> Arena::find(std::string_view name) const {
    for (int v = 0; v < num_vertices(); ++v) {
        if (vertices_[v].name == name) return v;
    }
    return std::nullopt;
}

int Arena::index_of(std::string_view name) const {
    auto v = find(name);
    if (!v) throw DomainError("unknown vertex '" + std::string(name) + "'");
    return *v;
}

bool Arena::integral() const {
    for (const auto& e : edges_) {
        if (e.w0.get_den() != 1 || e.w1.get_den() != 1) return false;
    }
    return true;
}

Arena Arena::with_weights(const std::vector<Rational>& w0, const std::vector<Rational>& w1) const {
    std::vector<Edge> edges = edges_;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        edges[e].w0 = w0[e];
        edges[e].w1 = w1[e];
    }
    return Arena(vertices_, std::move(edges));
}

bool operator==(const Arena& a, const Arena& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    for (int v = 0; v < a.num_vertices(); ++v) {
        if (a.vertices_[v].name != b.vertices_[v].name || a.vertices_[v].owner != b.vertices_[v].owner) return false;
    }
    for (int e = 0; e < a.num_edges(); ++e) {
        const auto& x = a.edges_[e];
        const auto& y = b.edges_[e];
        if (x.src != y.src || x.dst != y.dst || x.w0 != y.w0 || x.w1 != y.w1) return false;
    }
    return true;
}

namespace {

Rational parse_int_weight(const std::string& tok, int line) {
    Rational r;
    try {
        r = parse_rational(tok);
    } catch (const DomainError&) {
        throw ParseError(line, "weight '" + tok + "' is not an integer");
    }
    if (r.get_den() != 1) throw ParseError(line, "weight '" + tok + "' is not an integer");
    return r;
}

}  // namespace

Arena parse_game(std::string_view text) {
    struct PendingEdge {
        std::string src, dst;
        Rational w0, w1;
        int line;
    };
    std::vector<Vertex> vertices;
    std::map<std::string, int> index;
    std::vector<int> decl_line;
    std::vector<PendingEdge> pending;

    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok[0] == "vertex") {
            if (tok.size() != 3) throw ParseError(line, "syntax error: expected 'vertex <name> <0|1>'");
            if (tok[2] != "0" && tok[2] != "1") throw ParseError(line, "syntax error: owner must be 0 or 1");
            if (index.count(tok[1])) throw ParseError(line, "duplicate vertex name '" + tok[1] + "'");
            index[tok[1]] = static_cast<int>(vertices.size());
            vertices.push_back({tok[1], tok[2] == "1" ? 1 : 0});
            decl_line.push_back(line);
        } else if (tok[0] == "edge") {
            if (tok.size() != 5) throw ParseError(line, "syntax error: expected 'edge <src> <dst> <w0> <w1>'");
            pending.push_back({tok[1], tok[2], parse_int_weight(tok[3], line), parse_int_weight(tok[4], line), line});
        } else {
            throw ParseError(line, "syntax error: unknown directive '" + tok[0] + "'");
        }
    }

    std::vector<Edge> edges;
    std::vector<bool> has_out(vertices.size(), false);
    for (const auto& p : pending) {
        auto s = index.find(p.src);
        auto d = index.find(p.dst);
        if (s == index.end()) throw ParseError(p.line, "dangling edge endpoint '" + p.src + "'");
        if (d == index.end()) throw ParseError(p.line, "dangling edge endpoint '" + p.dst + "'");
        edges.push_back({s->second, d->second, p.w0, p.w1});
        has_out[s->second] = true;
    }
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        if (!has_out[v]) throw ParseError(decl_line[v], "vertex with no outgoing edge: '" + vertices[v].name + "'");
    }
    return Arena(std::move(vertices), std::move(edges));
}

std::string emit_game(const Arena& arena) {
    if (!arena.integral()) throw DomainError("emit_game: game files carry integer weights only");
    std::ostringstream out;
    for (const auto& v : arena.vertices()) out << "vertex " << v.name << ' ' << v.owner << '\n';
    for (const auto& e : arena.edges()) {
        out << "edge " << arena.name(e.src) << ' ' << arena.name(e.dst) << ' ' << e.w0 << ' ' << e.w1 << '\n';
    }
    return out.str();
}

std::vector<bool> reachable_from(const Arena& arena, int from) {
    std::vector<bool> seen(arena.num_vertices(), false);
    std::vector<int> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : arena.out_edges(v)) {
            int w = arena.edge(e).dst;
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

}  // namespace asv
