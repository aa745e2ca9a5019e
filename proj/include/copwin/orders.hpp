#pragma once

#include "copwin/graph.hpp"
#include "copwin/order.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace copwin {

/// Outcome of a checker: pass, or the first place where it failed.
struct CheckResult {
    bool ok = true;
    Rank rank = -1;        // first offending rank, when applicable
    Vertex vertex = kNoVertex;
    std::string message;

    explicit operator bool() const noexcept { return ok; }

    static CheckResult pass() { return {}; }
    static CheckResult fail(Rank rank, Vertex vertex, std::string message) {
        return CheckResult{false, rank, vertex, std::move(message)};
    }
};

/// Greedy peeling: repeatedly remove the lowest-id vertex dominated in the
/// remaining graph (dominator: lowest id), then reverse the removal sequence.
/// Absent when peeling gets stuck before one vertex remains.
std::optional<Order> find_dominating_order(const Graph& g);

/// Same peeling, in removal order; the survivor is the terminal last vertex.
std::optional<Order> find_dismantling_order(const Graph& g);

/// Both domination invariants at every rank. Throws DomainError when the order
/// does not cover exactly the vertices of `g`.
CheckResult verify_dominating_order(const Graph& g, const Order& order);

/// Suffix domination at every rank. Vertices listed in `exempt` are skipped;
/// used for truncations whose cut vertices are dominated only by vertices
/// beyond the window.
CheckResult verify_dismantling_order(const Graph& g, const Order& order, std::span<const Vertex> exempt = {});

/// Dispatches on the order's flavour.
CheckResult verify_order(const Graph& g, const Order& order);

/// Builds the domination map for a fixed sequence by picking, at every rank,
/// the lowest-id dominator inside the prefix (constructing) or suffix
/// (dismantling). Ranks without a dominator get kNoVertex; the result then
/// fails verification at the first such rank.
Order assign_domination_map(const Graph& g, std::vector<Vertex> sequence, Flavor flavor);

/// Reverses a finite order, switching flavour. The domination map is kept:
/// a vertex dominated in its prefix is dominated in the reversed suffix.
Order reversed(const Order& order);

struct NaturalizedOrder {
    Order order;
    std::vector<int> level; // indexed by vertex: n(v)
};

/// Levels n(v) = 1 + max n over earlier neighbours (n = 0 at rank 0), then a
/// stable sort by level; ties keep their original rank. The domination map
/// is reused unchanged. Throws DomainError if `order` does not verify.
NaturalizedOrder naturalize_order(const Graph& g, const Order& order);

/// Number of delta steps from each vertex to the terminal vertex.
///
/// Vertices whose chain stops before the terminal (a window cut) get -1.
/// A cycle in the domination map throws InvalidOrder.
struct DepthTable {
    std::vector<int> depth;

    int operator[](Vertex v) const { return depth.at(static_cast<std::size_t>(v)); }
    int max() const;
};

DepthTable depth_table(const Order& order);

} // namespace copwin
