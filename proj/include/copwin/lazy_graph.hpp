#pragma once

#include "copwin/graph.hpp"
#include "copwin/order.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace copwin {

using Key = std::string;

/// A countable reflexive graph described by oracles.
///
/// `neighbors(k)` returns the closed neighbourhood of k (k itself included)
/// and must be a pure function. `canonical_order` is injective into the
/// naturals; the root has the smallest value. `domination_hint`, when set,
/// returns the dominator of k in the constructing order given by
/// `canonical_order` (nullopt for the root).
struct LazyGraph {
    Key root;
    std::function<std::vector<Key>(const Key&)> neighbors;
    std::function<std::uint64_t(const Key&)> canonical_order;
    std::function<std::optional<Key>(const Key&)> domination_hint;
};

/// Finite window onto a LazyGraph: the keys within some radius of the root.
struct Ball {
    Graph graph;                 // labelled with the keys
    std::vector<Key> keys;       // id -> key, ids assigned in canonical order
    std::unordered_map<Key, Vertex> ids;
    std::vector<int> depth;      // BFS distance from the root

    /// The restricted hint as a constructing order, when the graph has one.
    /// Vertices whose hinted dominator falls outside the ball carry no delta
    /// and are listed in `hint_gaps`.
    std::optional<Order> hint;
    std::vector<Vertex> hint_gaps;

    Vertex id(const Key& k) const;
};

/// Breadth-first exploration to `radius` (inclusive). Throws
/// GeneratorContractViolation if an oracle answer is non-reflexive,
/// asymmetric inside the ball, has more than `max_degree` entries, or if the
/// ball grows past `max_vertices`.
Ball ball(const LazyGraph& g, int radius, std::size_t max_vertices = 1'000'000,
          std::size_t max_degree = 100'000);

} // namespace copwin
