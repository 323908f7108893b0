#include "asv/strategy.hpp"

#include <map>

#include "asv/errors.hpp"

namespace asv {

int MealyStrategy::next(int state, int vertex) const {
    auto it = transition.find({state, vertex});
    return it == transition.end() ? state : it->second;
}

std::optional<int> MealyStrategy::choose(int state, int vertex) const {
    auto it = choice.find({state, vertex});
    if (it == choice.end()) return std::nullopt;
    return it->second;
}

MealyStrategy MealyStrategy::memoryless_from(const Arena& arena, int player,
                                             const std::vector<int>& choice_per_vertex) {
    MealyStrategy s;
    s.player = player;
    for (int v = 0; v < arena.num_vertices(); ++v) {
        int e = v < static_cast<int>(choice_per_vertex.size()) ? choice_per_vertex[v] : -1;
        if (e < 0) continue;
        if (arena.owner(v) != player) throw DomainError("memoryless strategy chooses at a vertex the player does not own");
        if (e >= arena.num_edges() || arena.edge(e).src != v) {
            throw DomainError("strategy choice at '" + arena.name(v) + "' is not an outgoing edge");
        }
        s.choice[{0, v}] = e;
    }
    return s;
}

namespace {

int checked_choice(const Arena& arena, const MealyStrategy& sigma, int state, int v) {
    auto e = sigma.choose(state, v);
    // A vertex with a single successor leaves nothing to choose.
    if (!e && arena.out_edges(v).size() == 1) return arena.out_edges(v).front();
    if (!e) throw DomainError("strategy missing a choice at vertex '" + arena.name(v) + "'");
    if (*e < 0 || *e >= arena.num_edges() || arena.edge(*e).src != v) {
        throw DomainError("strategy choice at '" + arena.name(v) + "' is not an outgoing edge");
    }
    return *e;
}

}  // namespace

Arena fix_memoryless(const Arena& arena, const MealyStrategy& sigma, std::vector<int>* kept_edges) {
    if (!sigma.memoryless()) throw DomainError("expected a memoryless (1-state) strategy");
    std::vector<Edge> edges;
    if (kept_edges) kept_edges->clear();
    for (int e = 0; e < arena.num_edges(); ++e) {
        const Edge& ed = arena.edge(e);
        if (arena.owner(ed.src) == sigma.player && checked_choice(arena, sigma, 0, ed.src) != e) continue;
        edges.push_back(ed);
        if (kept_edges) kept_edges->push_back(e);
    }
    return Arena(arena.vertices(), std::move(edges));
}

Arena fix_player0_memoryless(const Arena& arena, const MealyStrategy& sigma0) {
    if (!sigma0.memoryless() || sigma0.player != 0) {
        throw DomainError("fix_player0_memoryless needs a 1-state Player-0 strategy");
    }
    return fix_memoryless(arena, sigma0);
}

Product product_with_strategy(const Arena& arena, const MealyStrategy& sigma0, std::optional<int> root) {
    if (sigma0.player != 0) throw DomainError("product_with_strategy expects a Player-0 strategy");
    std::map<std::pair<int, int>, int> id;
    std::vector<std::pair<int, int>> pairs;
    auto intern = [&](int v, int s) {
        auto [it, fresh] = id.emplace(std::make_pair(v, s), static_cast<int>(pairs.size()));
        if (fresh) pairs.emplace_back(v, s);
        return it->second;
    };

    Product out;
    if (root) {
        out.initial = intern(*root, sigma0.next(sigma0.initial, *root));
    } else {
        for (int s = 0; s < sigma0.num_states; ++s) {
            for (int v = 0; v < arena.num_vertices(); ++v) intern(v, s);
        }
    }

    struct Pending {
        int src, dst, base;
    };
    std::vector<Pending> pend;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [v, s] = pairs[i];
        auto follow = [&](int e) {
            int w = arena.edge(e).dst;
            int j = intern(w, sigma0.next(s, w));
            pend.push_back({static_cast<int>(i), j, e});
        };
        if (arena.owner(v) == 0) {
            follow(checked_choice(arena, sigma0, s, v));
        } else {
            for (int e : arena.out_edges(v)) follow(e);
        }
    }

    std::vector<Vertex> vertices;
    for (auto [v, s] : pairs) {
        std::string tag = s < static_cast<int>(sigma0.state_names.size()) ? sigma0.state_names[s] : std::to_string(s);
        vertices.push_back({arena.name(v) + "#" + tag, arena.owner(v)});
        out.base_vertex.push_back(v);
        out.state.push_back(s);
    }
    std::vector<Edge> edges;
    for (const auto& p : pend) {
        const Edge& b = arena.edge(p.base);
        edges.push_back({p.src, p.dst, b.w0, b.w1});
        out.base_edge.push_back(p.base);
    }
    out.arena = Arena(std::move(vertices), std::move(edges));
    return out;
}

std::vector<MealyStrategy> enumerate_memoryless(const Arena& arena, int player, const std::vector<bool>& relevant,
                                                std::size_t max_count) {
    std::vector<int> owned;
    std::size_t count = 1;
    for (int v = 0; v < arena.num_vertices(); ++v) {
        if (arena.owner(v) != player) continue;
        if (relevant[v] && arena.out_edges(v).size() > 1) {
            owned.push_back(v);
            count *= arena.out_edges(v).size();
            if (count > max_count) {
                throw ResourceError("memoryless strategy count exceeds guard (" + std::to_string(max_count) + ")");
            }
        }
    }
    std::vector<int> base(arena.num_vertices(), -1);
    for (int v = 0; v < arena.num_vertices(); ++v) {
        if (arena.owner(v) == player) base[v] = arena.out_edges(v).front();
    }
    std::vector<MealyStrategy> out;
    out.reserve(count);
    std::vector<std::size_t> digit(owned.size(), 0);
    while (true) {
        std::vector<int> pick = base;
        for (std::size_t i = 0; i < owned.size(); ++i) pick[owned[i]] = arena.out_edges(owned[i])[digit[i]];
        out.push_back(MealyStrategy::memoryless_from(arena, player, pick));
        std::size_t i = 0;
        while (i < owned.size() && ++digit[i] == arena.out_edges(owned[i]).size()) digit[i++] = 0;
        if (i == owned.size()) break;
    }
    return out;
}

}  // namespace asv
