#include "copwin/lazy_graph.hpp"

#include "copwin/errors.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

namespace copwin {

Vertex Ball::id(const Key& k) const {
    auto it = ids.find(k);
    if (it == ids.end())
        throw DomainError("key not in ball: " + k);
    return it->second;
}

Ball ball(const LazyGraph& g, int radius, std::size_t max_vertices, std::size_t max_degree) {
    if (radius < 0)
        throw DomainError("negative ball radius");
    if (!g.neighbors || !g.canonical_order)
        throw DomainError("lazy graph is missing its neighbour or order oracle");

    std::unordered_map<Key, int> dist;
    std::unordered_map<Key, std::vector<Key>> adjacency;
    std::vector<Key> discovered;
    std::queue<Key> frontier;

    auto fetch = [&](const Key& k) -> const std::vector<Key>& {
        auto it = adjacency.find(k);
        if (it != adjacency.end())
            return it->second;
        auto list = g.neighbors(k);
        if (list.size() > max_degree)
            throw GeneratorContractViolation("neighbour oracle returned " + std::to_string(list.size()) +
                                             " keys for " + k);
        if (std::find(list.begin(), list.end(), k) == list.end())
            throw GeneratorContractViolation("neighbour oracle is not reflexive at " + k);
        return adjacency.emplace(k, std::move(list)).first->second;
    };

    dist.emplace(g.root, 0);
    discovered.push_back(g.root);
    frontier.push(g.root);
    while (!frontier.empty()) {
        Key k = frontier.front();
        frontier.pop();
        int d = dist.at(k);
        if (d == radius)
            continue;
        for (const Key& w : fetch(k)) {
            if (dist.contains(w))
                continue;
            dist.emplace(w, d + 1);
            discovered.push_back(w);
            if (discovered.size() > max_vertices)
                throw GeneratorContractViolation("ball exceeds " + std::to_string(max_vertices) + " vertices");
            frontier.push(w);
        }
    }

    std::vector<std::pair<std::uint64_t, Key>> ranked;
    ranked.reserve(discovered.size());
    for (const Key& k : discovered)
        ranked.emplace_back(g.canonical_order(k), k);
    std::sort(ranked.begin(), ranked.end());
    for (std::size_t i = 1; i < ranked.size(); ++i)
        if (ranked[i].first == ranked[i - 1].first)
            throw GeneratorContractViolation("canonical order is not injective: " + ranked[i - 1].second +
                                             " and " + ranked[i].second);

    Ball out;
    out.keys.reserve(ranked.size());
    for (auto& [ord, k] : ranked) {
        out.ids.emplace(k, static_cast<Vertex>(out.keys.size()));
        out.keys.push_back(k);
    }
    out.depth.reserve(out.keys.size());
    for (const Key& k : out.keys)
        out.depth.push_back(dist.at(k));

    std::vector<Edge> edges;
    for (const Key& k : out.keys) {
        Vertex u = out.ids.at(k);
        for (const Key& w : fetch(k)) {
            auto it = out.ids.find(w);
            if (it == out.ids.end() || it->second == u)
                continue;
            const auto& back = fetch(w);
            if (std::find(back.begin(), back.end(), k) == back.end())
                throw GeneratorContractViolation("neighbour oracle is not symmetric: " + k + " -> " + w);
            if (u < it->second)
                edges.emplace_back(u, it->second);
        }
    }
    out.graph = Graph(out.keys.size(), edges, out.keys);

    if (g.domination_hint) {
        std::vector<Vertex> sequence(out.keys.size());
        std::vector<Vertex> delta(out.keys.size(), kNoVertex);
        for (std::size_t i = 0; i < sequence.size(); ++i) {
            sequence[i] = static_cast<Vertex>(i);
            if (i == 0)
                continue;
            auto hinted = g.domination_hint(out.keys[i]);
            auto it = hinted ? out.ids.find(*hinted) : out.ids.end();
            if (it == out.ids.end())
                out.hint_gaps.push_back(static_cast<Vertex>(i));
            else
                delta[i] = it->second;
        }
        out.hint = Order(Flavor::constructing, std::move(sequence), std::move(delta));
    }
    return out;
}

} // namespace copwin
