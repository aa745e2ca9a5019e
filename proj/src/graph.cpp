#include "copwin/graph.hpp"

#include "copwin/errors.hpp"

#include <algorithm>
#include <queue>

namespace copwin {

namespace {

constexpr std::size_t kMatrixLimit = 2048;

}

Graph::Graph(std::size_t order, std::span<const Edge> edges, std::vector<std::string> labels)
    : adjacency_(order), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != order)
        throw DomainError("label table size does not match vertex count");
    for (auto [u, v] : edges) {
        if (!contains(u) || !contains(v))
            throw DomainError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v)
            continue;
        adjacency_[static_cast<std::size_t>(u)].push_back(v);
        adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        edge_count_ += list.size();
    }
    edge_count_ /= 2;

    if (order <= kMatrixLimit) {
        matrix_.assign(order * order, 0);
        for (std::size_t u = 0; u < order; ++u)
            for (Vertex v : adjacency_[u])
                matrix_[u * order + static_cast<std::size_t>(v)] = 1;
    }
}

void Graph::require(Vertex v) const {
    if (!contains(v))
        throw DomainError("unknown vertex " + std::to_string(v) + " (order " + std::to_string(order()) + ")");
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    require(u);
    require(v);
    if (u == v)
        return true;
    if (!matrix_.empty())
        return matrix_[static_cast<std::size_t>(u) * order() + static_cast<std::size_t>(v)] != 0;
    const auto& list = adjacency_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    require(v);
    const auto& open = adjacency_[static_cast<std::size_t>(v)];
    std::vector<Vertex> closed;
    closed.reserve(open.size() + 1);
    auto split = std::lower_bound(open.begin(), open.end(), v);
    closed.insert(closed.end(), open.begin(), split);
    closed.push_back(v);
    closed.insert(closed.end(), split, open.end());
    return closed;
}

std::span<const Vertex> Graph::open_neighbors(Vertex v) const {
    require(v);
    return adjacency_[static_cast<std::size_t>(v)];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < order(); ++u)
        for (Vertex v : adjacency_[u])
            if (static_cast<Vertex>(u) < v)
                out.emplace_back(static_cast<Vertex>(u), v);
    return out;
}

std::string Graph::name(Vertex v) const {
    require(v);
    return labels_.empty() ? std::to_string(v) : labels_[static_cast<std::size_t>(v)];
}

std::optional<Vertex> Graph::find(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label)
            return static_cast<Vertex>(i);
    return std::nullopt;
}

bool Graph::connected() const {
    if (order() == 0)
        return true;
    auto d = distances_from(0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

std::vector<int> Graph::distances_from(Vertex source) const {
    require(source);
    std::vector<int> dist(order(), -1);
    std::queue<Vertex> frontier;
    dist[static_cast<std::size_t>(source)] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        Vertex u = frontier.front();
        frontier.pop();
        for (Vertex w : adjacency_[static_cast<std::size_t>(u)]) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                frontier.push(w);
            }
        }
    }
    return dist;
}

bool dominates(const Graph& g, Vertex u, Vertex v) {
    g.require(u);
    g.require(v);
    return dominates_within(g, u, v, [](Vertex) { return true; });
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    if (vertices.empty())
        throw DomainError("induced subgraph of an empty vertex set");
    std::vector<Vertex> members(vertices.begin(), vertices.end());
    for (Vertex v : members)
        g.require(v);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());

    std::vector<Vertex> from_parent(g.order(), kNoVertex);
    for (std::size_t i = 0; i < members.size(); ++i)
        from_parent[static_cast<std::size_t>(members[i])] = static_cast<Vertex>(i);

    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (Vertex w : g.open_neighbors(members[i])) {
            Vertex j = from_parent[static_cast<std::size_t>(w)];
            if (j != kNoVertex && static_cast<Vertex>(i) < j)
                edges.emplace_back(static_cast<Vertex>(i), j);
        }
        if (g.has_labels())
            labels.push_back(g.labels()[static_cast<std::size_t>(members[i])]);
    }
    Graph sub(members.size(), edges, std::move(labels));
    return Subgraph{std::move(sub), std::move(members), std::move(from_parent)};
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()), dist_(n_ * n_, -1) {
    for (std::size_t s = 0; s < n_; ++s) {
        auto row = g.distances_from(static_cast<Vertex>(s));
        std::copy(row.begin(), row.end(), dist_.begin() + static_cast<std::ptrdiff_t>(s * n_));
    }
}

} // namespace copwin
