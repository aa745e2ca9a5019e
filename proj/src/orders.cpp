#include "copwin/orders.hpp"

#include "copwin/errors.hpp"

#include <algorithm>
#include <numeric>

namespace copwin {

namespace {

struct Peeling {
    std::vector<Vertex> removed; // removal sequence
    std::vector<Vertex> dominator;
    Vertex survivor = kNoVertex;
};

// Removes the lowest-id dominated vertex until one vertex is left; empty
// optional when no alive vertex is dominated earlier than that.
std::optional<Peeling> peel(const Graph& g) {
    const std::size_t n = g.order();
    if (n == 0)
        throw DomainError("empty graph");
    std::vector<char> alive(n, 1);
    auto inside = [&](Vertex w) { return alive[static_cast<std::size_t>(w)] != 0; };
    Peeling out;
    out.dominator.assign(n, kNoVertex);
    for (std::size_t step = 0; step + 1 < n; ++step) {
        Vertex chosen = kNoVertex;
        for (Vertex v = 0; v < static_cast<Vertex>(n) && chosen == kNoVertex; ++v) {
            if (!inside(v))
                continue;
            for (Vertex u : g.open_neighbors(v)) {
                if (inside(u) && dominates_within(g, u, v, inside)) {
                    chosen = v;
                    out.dominator[static_cast<std::size_t>(v)] = u;
                    break;
                }
            }
        }
        if (chosen == kNoVertex)
            return std::nullopt;
        alive[static_cast<std::size_t>(chosen)] = 0;
        out.removed.push_back(chosen);
    }
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v)
        if (inside(v))
            out.survivor = v;
    return out;
}

void require_same_vertices(const Graph& g, const Order& order) {
    if (order.size() != g.order())
        throw DomainError("order has " + std::to_string(order.size()) + " vertices, graph has " +
                          std::to_string(g.order()));
}

} // namespace

std::optional<Order> find_dominating_order(const Graph& g) {
    auto p = peel(g);
    if (!p)
        return std::nullopt;
    std::vector<Vertex> sequence{p->survivor};
    sequence.insert(sequence.end(), p->removed.rbegin(), p->removed.rend());
    return Order(Flavor::constructing, std::move(sequence), std::move(p->dominator));
}

std::optional<Order> find_dismantling_order(const Graph& g) {
    auto p = peel(g);
    if (!p)
        return std::nullopt;
    std::vector<Vertex> sequence = std::move(p->removed);
    sequence.push_back(p->survivor);
    return Order(Flavor::dismantling, std::move(sequence), std::move(p->dominator));
}

CheckResult verify_dominating_order(const Graph& g, const Order& order) {
    require_same_vertices(g, order);
    if (order.flavor() != Flavor::constructing)
        throw DomainError("verify_dominating_order needs a constructing order");
    for (Rank i = 1; i < static_cast<Rank>(order.size()); ++i) {
        Vertex v = order.at(i);
        Vertex d = order.delta(v);
        if (d == kNoVertex)
            return CheckResult::fail(i, v, "no dominator recorded for " + g.name(v));
        if (order.rank(d) >= i)
            return CheckResult::fail(i, v, "dominator " + g.name(d) + " of " + g.name(v) + " is not earlier");
        auto earlier = [&](Vertex w) { return order.rank(w) <= i; };
        if (!dominates_within(g, d, v, earlier))
            return CheckResult::fail(i, v, g.name(d) + " does not dominate " + g.name(v) + " in its prefix");
    }
    return CheckResult::pass();
}

CheckResult verify_dismantling_order(const Graph& g, const Order& order, std::span<const Vertex> exempt) {
    require_same_vertices(g, order);
    if (order.flavor() != Flavor::dismantling)
        throw DomainError("verify_dismantling_order needs a dismantling order");
    const Rank last = static_cast<Rank>(order.size()) - 1;
    for (Rank i = 0; i < last; ++i) {
        Vertex v = order.at(i);
        if (std::find(exempt.begin(), exempt.end(), v) != exempt.end())
            continue;
        Vertex d = order.delta(v);
        if (d == kNoVertex)
            return CheckResult::fail(i, v, "no dominator recorded for " + g.name(v));
        if (order.rank(d) <= i)
            return CheckResult::fail(i, v, "dominator " + g.name(d) + " of " + g.name(v) + " is not later");
        auto later = [&](Vertex w) { return order.rank(w) >= i; };
        if (!dominates_within(g, d, v, later))
            return CheckResult::fail(i, v, g.name(d) + " does not dominate " + g.name(v) + " in its suffix");
    }
    return CheckResult::pass();
}

CheckResult verify_order(const Graph& g, const Order& order) {
    return order.flavor() == Flavor::constructing ? verify_dominating_order(g, order)
                                                  : verify_dismantling_order(g, order);
}

Order assign_domination_map(const Graph& g, std::vector<Vertex> sequence, Flavor flavor) {
    const std::size_t n = sequence.size();
    std::vector<Rank> rank(g.order(), -1);
    for (std::size_t i = 0; i < n; ++i) {
        g.require(sequence[i]);
        rank[static_cast<std::size_t>(sequence[i])] = static_cast<Rank>(i);
    }
    std::vector<Vertex> delta(n, kNoVertex);
    for (std::size_t i = 0; i < n; ++i) {
        Vertex v = sequence[i];
        const Rank ri = static_cast<Rank>(i);
        auto inside = [&](Vertex w) {
            Rank rw = rank[static_cast<std::size_t>(w)];
            return flavor == Flavor::constructing ? (rw >= 0 && rw <= ri) : rw >= ri;
        };
        for (Vertex u : g.open_neighbors(v)) {
            Rank ru = rank[static_cast<std::size_t>(u)];
            bool strictly_inside = flavor == Flavor::constructing ? (ru >= 0 && ru < ri) : ru > ri;
            if (strictly_inside && dominates_within(g, u, v, inside)) {
                delta[static_cast<std::size_t>(v)] = u;
                break;
            }
        }
    }
    return Order(flavor, std::move(sequence), std::move(delta));
}

Order reversed(const Order& order) {
    std::vector<Vertex> sequence(order.sequence().rbegin(), order.sequence().rend());
    std::vector<Vertex> delta(order.delta_map().begin(), order.delta_map().end());
    Flavor other = order.flavor() == Flavor::constructing ? Flavor::dismantling : Flavor::constructing;
    return Order(other, std::move(sequence), std::move(delta));
}

NaturalizedOrder naturalize_order(const Graph& g, const Order& order) {
    if (auto check = verify_dominating_order(g, order); !check)
        throw DomainError("cannot naturalize an invalid order: " + check.message);
    const std::size_t n = order.size();
    std::vector<int> level(n, 0);
    for (Rank i = 1; i < static_cast<Rank>(n); ++i) {
        Vertex v = order.at(i);
        int best = -1;
        for (Vertex w : g.open_neighbors(v))
            if (order.rank(w) < i)
                best = std::max(best, level[static_cast<std::size_t>(w)]);
        // a verified order always has the dominator as an earlier neighbour
        level[static_cast<std::size_t>(v)] = best + 1;
    }
    std::vector<Vertex> sequence(order.sequence().begin(), order.sequence().end());
    std::stable_sort(sequence.begin(), sequence.end(), [&](Vertex a, Vertex b) {
        return level[static_cast<std::size_t>(a)] < level[static_cast<std::size_t>(b)];
    });
    std::vector<Vertex> delta(order.delta_map().begin(), order.delta_map().end());
    return NaturalizedOrder{Order(Flavor::constructing, std::move(sequence), std::move(delta)), std::move(level)};
}

int DepthTable::max() const {
    return depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
}

DepthTable depth_table(const Order& order) {
    const std::size_t n = order.size();
    constexpr int kUnknown = -2;
    std::vector<int> depth(n, kUnknown);
    depth[static_cast<std::size_t>(order.terminal())] = 0;
    std::vector<Vertex> path;
    for (Vertex start = 0; start < static_cast<Vertex>(n); ++start) {
        path.clear();
        Vertex v = start;
        int base = 0;
        while (true) {
            int known = depth[static_cast<std::size_t>(v)];
            if (known != kUnknown) {
                base = known;
                break;
            }
            if (path.size() > n)
                throw InvalidOrder("domination map contains a cycle through vertex " + std::to_string(start));
            path.push_back(v);
            Vertex next = order.delta(v);
            if (next == kNoVertex) {
                base = -1;
                path.pop_back();
                depth[static_cast<std::size_t>(v)] = -1;
                break;
            }
            v = next;
        }
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
            base = base < 0 ? -1 : base + 1;
            depth[static_cast<std::size_t>(*it)] = base;
        }
    }
    return DepthTable{std::move(depth)};
}

} // namespace copwin
