#include "copwin/generators.hpp"

#include "copwin/errors.hpp"
#include "copwin/orders.hpp"
#include "copwin/random.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace copwin {

namespace {

void require_at_least(int value, int minimum, const char* what) {
    if (value < minimum)
        throw DomainError(std::string(what) + " must be at least " + std::to_string(minimum) + ", got " +
                          std::to_string(value));
}

std::vector<Vertex> iota_sequence(int n) {
    std::vector<Vertex> s(static_cast<std::size_t>(n));
    std::iota(s.begin(), s.end(), 0);
    return s;
}

std::vector<std::string> indexed_labels(const char* prefix, int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i)
        out.push_back(prefix + std::to_string(i));
    return out;
}

} // namespace

Family path_graph(int n) {
    require_at_least(n, 1, "path length");
    std::vector<Edge> edges;
    std::vector<Vertex> delta(static_cast<std::size_t>(n), kNoVertex);
    for (Vertex i = 1; i < n; ++i) {
        edges.emplace_back(i - 1, i);
        delta[static_cast<std::size_t>(i)] = i - 1;
    }
    Family f{Graph(static_cast<std::size_t>(n), edges), std::nullopt, {}, {}, {}};
    f.order = Order(Flavor::constructing, iota_sequence(n), std::move(delta));
    return f;
}

Family cycle_graph(int n) {
    require_at_least(n, 3, "cycle length");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    Family f{Graph(static_cast<std::size_t>(n), edges), std::nullopt, {}, {}, {}};
    if (n == 3)
        f.order = Order(Flavor::constructing, {0, 1, 2}, {kNoVertex, 0, 0});
    return f;
}

Family complete_graph(int n) {
    require_at_least(n, 1, "complete graph order");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    std::vector<Vertex> delta(static_cast<std::size_t>(n), 0);
    delta[0] = kNoVertex;
    Family f{Graph(static_cast<std::size_t>(n), edges), std::nullopt, {}, {}, {}};
    f.order = Order(Flavor::constructing, iota_sequence(n), std::move(delta));
    return f;
}

Family star_graph(int leaves) {
    require_at_least(leaves, 0, "star leaf count");
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= leaves; ++v)
        edges.emplace_back(0, v);
    std::vector<Vertex> delta(static_cast<std::size_t>(leaves + 1), 0);
    delta[0] = kNoVertex;
    Family f{Graph(static_cast<std::size_t>(leaves + 1), edges), std::nullopt, {}, {}, {}};
    f.order = Order(Flavor::constructing, iota_sequence(leaves + 1), std::move(delta));
    return f;
}

Graph petersen_graph() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, 5 + i);
    }
    for (auto& [u, v] : edges)
        if (u > v)
            std::swap(u, v);
    return Graph(10, edges);
}

// ---------------------------------------------------------------------------
// H and T5 (x) H

namespace {

constexpr Vertex kCenter = 10;

Vertex outer(int i) { return static_cast<Vertex>((i % 5 + 5) % 5); }
Vertex inner(int i) { return static_cast<Vertex>(5 + (i % 5 + 5) % 5); }

std::vector<std::string> h_labels() {
    auto labels = indexed_labels("a_", 5);
    auto b = indexed_labels("b_", 5);
    labels.insert(labels.end(), b.begin(), b.end());
    labels.push_back("c");
    return labels;
}

Vertex h_id(std::string_view name) {
    static const auto labels = h_labels();
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == name)
            return static_cast<Vertex>(i);
    throw DomainError("not an H vertex: " + std::string(name));
}

const Graph& h_graph() {
    static const Graph g = h_block().graph;
    return g;
}

std::uint64_t h_position(Vertex id) {
    static const auto labels = h_labels();
    for (std::size_t i = 0; i < kHOrderNames.size(); ++i)
        if (kHOrderNames[i] == labels[static_cast<std::size_t>(id)])
            return i;
    return 0;
}

} // namespace

std::string_view h_dominator(std::string_view name) {
    static constexpr std::pair<std::string_view, std::string_view> table[] = {
        {"b_4", "a_0"}, {"c", "b_4"},   {"b_0", "b_4"}, {"b_1", "b_0"}, {"b_2", "b_1"},
        {"b_3", "c"},   {"a_1", "b_1"}, {"a_2", "b_2"}, {"a_3", "b_3"}, {"a_4", "b_4"},
    };
    for (auto [v, d] : table)
        if (v == name)
            return d;
    if (name == "a_0")
        return {};
    throw DomainError("not an H vertex: " + std::string(name));
}

Family h_block() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(outer(i), outer(i + 1));
        edges.emplace_back(inner(i), inner(i + 1));
        for (int off : {-1, 0, 1})
            edges.emplace_back(outer(i), inner(i + off));
        edges.emplace_back(inner(i), kCenter);
    }
    for (auto& [u, v] : edges)
        if (u > v)
            std::swap(u, v);
    auto labels = h_labels();
    Family f{Graph(11, edges, labels), std::nullopt, {}, {}, {}};
    std::vector<Vertex> sequence;
    std::vector<Vertex> delta(11, kNoVertex);
    for (auto name : kHOrderNames) {
        Vertex v = h_id(name);
        sequence.push_back(v);
        if (auto d = h_dominator(name); !d.empty())
            delta[static_cast<std::size_t>(v)] = h_id(d);
    }
    f.order = Order(Flavor::constructing, std::move(sequence), std::move(delta));
    return f;
}

std::pair<std::string, std::string> split_t5_key(const Key& key) {
    auto colon = key.find(':');
    if (colon == std::string::npos)
        throw DomainError("malformed T5 key: " + key);
    std::string path = key.substr(0, colon);
    std::string name = key.substr(colon + 1);
    for (std::size_t i = 0; i < path.size(); ++i) {
        char ch = path[i];
        bool ok = i == 0 ? (ch >= '0' && ch <= '4') : (ch >= '1' && ch <= '4');
        if (!ok)
            throw DomainError("malformed T5 key: " + key);
    }
    h_id(name);
    return {std::move(path), std::move(name)};
}

LazyGraph t5_of_h() {
    LazyGraph g;
    g.root = ":a_0";
    g.neighbors = [](const Key& key) {
        auto [path, name] = split_t5_key(key);
        const Graph& h = h_graph();
        std::vector<Key> out;
        for (Vertex w : h.neighbors(h_id(name)))
            out.push_back(path + ":" + h.name(w));
        if (name[0] == 'a') {
            const int port = name[2] - '0';
            if (path.empty())
                out.push_back(std::to_string(port) + ":a_0");
            else if (port == 0)
                out.push_back(path.substr(0, path.size() - 1) + ":a_" + path.back());
            else
                out.push_back(path + std::to_string(port) + ":a_0");
        }
        return out;
    };
    g.canonical_order = [](const Key& key) {
        auto [path, name] = split_t5_key(key);
        const std::uint64_t d = path.size();
        std::uint64_t copy = 0;
        if (d > 0) {
            std::uint64_t offset = 1, level = 5;
            for (std::uint64_t j = 1; j < d; ++j, level *= 4)
                offset += level;
            std::uint64_t index = static_cast<std::uint64_t>(path[0] - '0');
            for (std::uint64_t i = 1; i < d; ++i)
                index = index * 4 + static_cast<std::uint64_t>(path[i] - '1');
            copy = offset + index;
        }
        return copy * 11 + h_position(h_id(name));
    };
    g.domination_hint = [](const Key& key) -> std::optional<Key> {
        auto [path, name] = split_t5_key(key);
        if (name != "a_0")
            return path + ":" + std::string(h_dominator(name));
        if (path.empty())
            return std::nullopt;
        return path.substr(0, path.size() - 1) + ":a_" + path.back();
    };
    return g;
}

// ---------------------------------------------------------------------------
// Rays and the a/b graph

namespace {

int ray_index(const Key& key) {
    if (key.size() < 3 || key.compare(0, 2, "a_") != 0)
        throw DomainError("malformed ray key: " + key);
    std::size_t used = 0;
    int i = std::stoi(key.substr(2), &used);
    if (used != key.size() - 2 || i < 0)
        throw DomainError("malformed ray key: " + key);
    return i;
}

} // namespace

LazyGraph ray() {
    LazyGraph g;
    g.root = "a_0";
    g.neighbors = [](const Key& key) {
        int i = ray_index(key);
        std::vector<Key> out;
        if (i > 0)
            out.push_back("a_" + std::to_string(i - 1));
        out.push_back(key);
        out.push_back("a_" + std::to_string(i + 1));
        return out;
    };
    g.canonical_order = [](const Key& key) { return static_cast<std::uint64_t>(ray_index(key)); };
    g.domination_hint = [](const Key& key) -> std::optional<Key> {
        int i = ray_index(key);
        if (i == 0)
            return std::nullopt;
        return "a_" + std::to_string(i - 1);
    };
    return g;
}

Family ray_dismantling(int radius) {
    require_at_least(radius, 0, "ray radius");
    const int n = radius + 1;
    std::vector<Edge> edges;
    std::vector<Vertex> delta(static_cast<std::size_t>(n), kNoVertex);
    for (Vertex i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
        delta[static_cast<std::size_t>(i)] = i + 1;
    }
    Family f{Graph(static_cast<std::size_t>(n), edges, indexed_labels("a_", n)), std::nullopt, {}, {}, {}};
    f.order = Order(Flavor::dismantling, iota_sequence(n), std::move(delta));
    return f;
}

Family ab_graph(int n) {
    require_at_least(n, 1, "a/b graph size");
    const Vertex b0 = n + 1, b1 = n + 2, b2 = n + 3;
    const int total = n + 4;
    std::vector<Edge> edges;
    for (Vertex i = 0; i <= n; ++i) {
        if (i < n)
            edges.emplace_back(i, i + 1);
        edges.emplace_back(i, b0);
        edges.emplace_back(i, b2);
    }
    edges.emplace_back(b0, b1);
    edges.emplace_back(b1, b2);

    auto labels = indexed_labels("a_", n + 1);
    for (const char* b : {"b_0", "b_1", "b_2"})
        labels.emplace_back(b);
    Family f{Graph(static_cast<std::size_t>(total), edges, labels), std::nullopt, {}, {}, {}};

    std::vector<Vertex> delta(static_cast<std::size_t>(total), kNoVertex);
    for (Vertex i = 0; i < n; ++i)
        delta[static_cast<std::size_t>(i)] = i + 1;
    delta[static_cast<std::size_t>(b0)] = b1;
    delta[static_cast<std::size_t>(b1)] = b2;
    f.order = Order(Flavor::dismantling, iota_sequence(total), std::move(delta));
    f.exempt = {n};

    f.retraction = iota_sequence(total);
    for (Vertex i = 0; i <= n; ++i)
        f.retraction[static_cast<std::size_t>(i)] = 0;
    f.retract_target = {0, b0, b1, b2};
    return f;
}

// ---------------------------------------------------------------------------
// Random families

Family random_constructible(int n, std::uint64_t seed) {
    require_at_least(n, 1, "vertex count");
    Rng rng(seed);
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    std::vector<Edge> edges;
    std::vector<Vertex> delta(static_cast<std::size_t>(n), kNoVertex);
    for (Vertex v = 1; v < n; ++v) {
        const Vertex u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(v)));
        delta[static_cast<std::size_t>(v)] = u;
        std::vector<Vertex> joined{u};
        for (Vertex w : adj[static_cast<std::size_t>(u)])
            if (rng.chance(0.5))
                joined.push_back(w);
        for (Vertex w : joined) {
            adj[static_cast<std::size_t>(w)].push_back(v);
            adj[static_cast<std::size_t>(v)].push_back(w);
            edges.emplace_back(w, v);
        }
    }
    Family f{Graph(static_cast<std::size_t>(n), edges), std::nullopt, {}, {}, {}};
    f.order = Order(Flavor::constructing, iota_sequence(n), std::move(delta));
    return f;
}

Graph random_connected(int n, double p, std::uint64_t seed) {
    require_at_least(n, 1, "vertex count");
    if (!(p >= 0.0 && p <= 1.0))
        throw DomainError("edge probability must lie in [0, 1]");
    Rng rng(seed);
    std::vector<Vertex> parent(static_cast<std::size_t>(n), kNoVertex);
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        parent[static_cast<std::size_t>(v)] = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(v)));
        edges.emplace_back(parent[static_cast<std::size_t>(v)], v);
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (parent[static_cast<std::size_t>(v)] != u && rng.chance(p))
                edges.emplace_back(u, v);
    return Graph(static_cast<std::size_t>(n), edges);
}

TreeBall leafless_tree_ball(int degree, int radius) {
    require_at_least(degree, 2, "tree degree");
    require_at_least(radius, 1, "tree ball radius");
    std::vector<Vertex> parent{kNoVertex};
    std::vector<int> depth{0};
    std::vector<Edge> edges;
    for (std::size_t v = 0; v < parent.size(); ++v) {
        if (depth[v] == radius)
            continue;
        const int children = v == 0 ? degree : degree - 1;
        for (int i = 0; i < children; ++i) {
            const Vertex child = static_cast<Vertex>(parent.size());
            parent.push_back(static_cast<Vertex>(v));
            depth.push_back(depth[v] + 1);
            edges.emplace_back(static_cast<Vertex>(v), child);
        }
    }
    const std::size_t n = parent.size();
    TreeBall out{Graph(n, edges), std::vector<char>(n, 0), Order{}};
    for (std::size_t v = 0; v < n; ++v)
        out.interior[v] = depth[v] < radius ? 1 : 0;
    out.bfs_order = Order(Flavor::constructing, iota_sequence(static_cast<int>(n)), std::move(parent));
    return out;
}

} // namespace copwin
