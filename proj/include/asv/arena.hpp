#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "asv/rational.hpp"

namespace asv {

struct Vertex {
    std::string name;
    int owner = 0;  // 0 = Leader (Player 0), 1 = Follower (Player 1)
};

struct Edge {
    int src = 0;
    int dst = 0;
    Rational w0;
    Rational w1;

    const Rational& weight(int dim) const { return dim == 0 ? w0 : w1; }
};

// Bi-weighted game graph. Parallel edges are allowed, so plays and strategies
// refer to edge indices rather than successor vertices.
class Arena {
public:
    Arena() = default;
    // Validates names, endpoints and the "every vertex has a successor" rule.
    Arena(std::vector<Vertex> vertices, std::vector<Edge> edges);

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Vertex& vertex(int v) const { return vertices_[v]; }
    const Edge& edge(int e) const { return edges_[e]; }
    const std::vector<int>& out_edges(int v) const { return out_[v]; }
    int owner(int v) const { return vertices_[v].owner; }
    const std::string& name(int v) const { return vertices_[v].name; }

    std::optional<int> find(std::string_view name) const;
    // Like find() but throws DomainError for unknown names.
    int index_of(std::string_view name) const;

    // W = max |w_i(e)| over edges and both dimensions.
    const Rational& max_abs_weight() const { return max_abs_; }
    bool integral() const;

    // Structural copy with replaced weights (same vertices and edge order).
    Arena with_weights(const std::vector<Rational>& w0, const std::vector<Rational>& w1) const;

    friend bool operator==(const Arena& a, const Arena& b);

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> out_;
    Rational max_abs_;
};

// Game-file format: "# comment", "vertex <name> <0|1>", "edge <src> <dst> <w0> <w1>".
Arena parse_game(std::string_view text);
// Inverse of parse_game. Requires integral weights.
std::string emit_game(const Arena& arena);

// Vertices reachable from `from` (inclusive), as a membership mask.
std::vector<bool> reachable_from(const Arena& arena, int from);

}  // namespace asv
