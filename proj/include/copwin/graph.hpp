#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace copwin {

using Vertex = std::int32_t;
using Rank = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr Vertex kNoVertex = -1;

/// Finite, undirected, reflexive graph on the dense vertex set 0..order()-1.
///
/// Loops are implicit. The adjacency lists never store (v, v); every query
/// (`adjacent`, `neighbors`) nevertheless reports a vertex as its own
/// neighbour, so staying put is always a legal move.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Loops and duplicate edges are
    /// ignored; out-of-range endpoints throw DomainError. `labels` is either
    /// empty or has exactly `order` entries.
    Graph(std::size_t order, std::span<const Edge> edges, std::vector<std::string> labels = {});

    std::size_t order() const noexcept { return adjacency_.size(); }
    bool contains(Vertex v) const noexcept { return v >= 0 && static_cast<std::size_t>(v) < order(); }

    /// Throws DomainError when `v` is not a vertex.
    void require(Vertex v) const;

    bool adjacent(Vertex u, Vertex v) const;

    /// Closed neighbourhood N[v], sorted, including v itself.
    std::vector<Vertex> neighbors(Vertex v) const;

    /// Open neighbourhood, sorted, without v.
    std::span<const Vertex> open_neighbors(Vertex v) const;

    /// Number of non-loop edges at v.
    std::size_t degree(Vertex v) const { return open_neighbors(v).size(); }

    /// All non-loop edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;
    std::size_t edge_count() const noexcept { return edge_count_; }

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    /// Label when present, decimal id otherwise.
    std::string name(Vertex v) const;
    std::optional<Vertex> find(std::string_view label) const;

    bool connected() const;

    /// BFS distances from `source`; -1 marks unreachable vertices.
    std::vector<int> distances_from(Vertex source) const;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::uint8_t> matrix_;
    std::vector<std::string> labels_;
    std::size_t edge_count_ = 0;
};

/// u dominates v: u != v, u ~ v, and N[v] is contained in N[u].
bool dominates(const Graph& g, Vertex u, Vertex v);

/// Same test restricted to the vertices for which `inside(w)` holds; both u
/// and v are assumed inside.
template <class Pred>
bool dominates_within(const Graph& g, Vertex u, Vertex v, Pred inside) {
    if (u == v || !g.adjacent(u, v))
        return false;
    for (Vertex w : g.open_neighbors(v))
        if (inside(w) && !g.adjacent(u, w))
            return false;
    return true;
}

struct Subgraph {
    Graph graph;
    std::vector<Vertex> to_parent;   // subgraph id -> parent id
    std::vector<Vertex> from_parent; // parent id -> subgraph id or kNoVertex
};

/// Subgraph induced by `vertices`. Ids are reassigned densely in increasing
/// parent-id order; labels carry over.
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// All-pairs BFS distances, row-major.
class DistanceMatrix {
public:
    explicit DistanceMatrix(const Graph& g);
    int operator()(Vertex u, Vertex v) const { return dist_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)]; }

private:
    std::size_t n_;
    std::vector<int> dist_;
};

} // namespace copwin
