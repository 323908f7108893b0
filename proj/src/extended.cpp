#include "asv/extended.hpp"

#include <algorithm>
#include <map>

namespace asv {

ExtendedArena build_extended_game(const Arena& base, int root, const Limits& limits) {
    if (root < 0 || root >= base.num_vertices()) throw DomainError("extended game root out of range");
    ExtendedArena ext;
    std::map<std::pair<int, std::vector<int>>, int> id;
    auto intern = [&](int v, std::vector<int> P) {
        auto key = std::make_pair(v, P);
        auto it = id.find(key);
        if (it != id.end()) return it->second;
        if (ext.base_vertex.size() >= limits.max_extended_vertices) {
            throw ResourceError("extended game exceeds guard (" + std::to_string(limits.max_extended_vertices) +
                                " vertices)");
        }
        int fresh = static_cast<int>(ext.base_vertex.size());
        id.emplace(std::move(key), fresh);
        ext.base_vertex.push_back(v);
        ext.visited.push_back(std::move(P));
        return fresh;
    };

    intern(root, {root});
    struct Pending {
        int src, dst, base;
    };
    std::vector<Pending> edges;
    for (std::size_t i = 0; i < ext.base_vertex.size(); ++i) {
        int v = ext.base_vertex[i];
        for (int e : base.out_edges(v)) {
            int w = base.edge(e).dst;
            std::vector<int> P = ext.visited[i];
            auto pos = std::lower_bound(P.begin(), P.end(), w);
            if (pos == P.end() || *pos != w) P.insert(pos, w);
            int j = intern(w, std::move(P));
            edges.push_back({static_cast<int>(i), j, e});
        }
    }

    std::vector<Vertex> vertices;
    for (std::size_t i = 0; i < ext.base_vertex.size(); ++i) {
        std::string name = base.name(ext.base_vertex[i]) + "{";
        for (std::size_t k = 0; k < ext.visited[i].size(); ++k) {
            if (k) name += ",";
            name += base.name(ext.visited[i][k]);
        }
        vertices.push_back({name + "}", base.owner(ext.base_vertex[i])});
    }
    std::vector<Edge> out_edges;
    for (const auto& p : edges) {
        const Edge& b = base.edge(p.base);
        out_edges.push_back({p.src, p.dst, b.w0, b.w1});
        ext.base_edge.push_back(p.base);
    }
    ext.arena = Arena(std::move(vertices), std::move(out_edges));
    return ext;
}

}  // namespace asv
