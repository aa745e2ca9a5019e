#pragma once

#include "copwin/graph.hpp"
#include "copwin/lazy_graph.hpp"
#include "copwin/order.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace copwin {

/// A finite graph with whatever the generator knows about it.
struct Family {
    Graph graph;
    std::optional<Order> order;
    /// Vertices whose dominator lies outside a truncated window; skipped by
    /// verify_dismantling_order.
    std::vector<Vertex> exempt;
    /// A retraction shipped with the family (full vertex map) and its image.
    std::vector<Vertex> retraction;
    std::vector<Vertex> retract_target;
};

/// v0 - v1 - ... - v_{n-1}; constructing order left to right, delta = left neighbour.
Family path_graph(int n);
/// n >= 3. Ships an order only for n == 3.
Family cycle_graph(int n);
/// Order 0..n-1, delta = 0.
Family complete_graph(int n);
/// Centre 0 and leaves 1..leaves; centre-first order.
Family star_graph(int leaves);
Graph petersen_graph();

/// Position of each H vertex in the H dominating order.
inline constexpr std::array<std::string_view, 11> kHOrderNames = {"a_0", "b_4", "c",   "b_0", "b_1", "b_2",
                                                                  "b_3", "a_1", "a_2", "a_3", "a_4"};

/// The building block H: outer 5-cycle a_0..a_4 (ids 0..4), inner 5-cycle
/// b_0..b_4 (ids 5..9), centre c (id 10); a_i ~ b_{i-1}, b_i, b_{i+1}; c ~
/// every b_i. Ships the order a_0, b_4, c, b_0, b_1, b_2, b_3, a_1, ..., a_4.
Family h_block();

/// The H-block dominator of `name`, or empty for a_0.
std::string_view h_dominator(std::string_view name);

/// Copies of H on the vertices of the 5-regular tree; tree edges join a_p of
/// a parent copy to a_0 of its child. Keys are "<path>:<name>", the path
/// being the port digits from the root copy ("" for the root copy). The
/// canonical order lists copies breadth first, lexicographically within a
/// level, and each copy in H order.
LazyGraph t5_of_h();

/// Path of copies from the root copy to the copy holding `key`, and the name.
std::pair<std::string, std::string> split_t5_key(const Key& key);

/// a_0 - a_1 - a_2 - ... with root a_0; hint delta(a_i) = a_{i-1}.
LazyGraph ray();

/// a_0 .. a_radius as a path with the dismantling order left to right and
/// delta(a_i) = a_{i+1}; a_radius is terminal.
Family ray_dismantling(int radius);

/// a_0..a_N (ids 0..N) and b_0, b_1, b_2 (ids N+1..N+3): a path on the a's, a
/// path b_0 - b_1 - b_2, and b_0, b_2 joined to every a_i. Ships the
/// dismantling order a_0, ..., a_N, b_0, b_1, b_2 (a_N exempt: its
/// dominator a_{N+1} lies beyond the window) and the retraction a_i -> a_0
/// onto the 4-cycle a_0, b_0, b_1, b_2.
Family ab_graph(int n);

/// Vertex v > 0 joins a uniform earlier vertex u and a random subset of u's
/// closed neighbourhood among earlier vertices, so u dominates v on arrival.
/// Ships that construction order with delta(v) = u.
Family random_constructible(int n, std::uint64_t seed);

/// Random spanning tree (each vertex joins a uniform earlier one) plus every
/// other pair independently with probability p.
Graph random_connected(int n, double p, std::uint64_t seed);

struct TreeBall {
    Graph graph;
    std::vector<char> interior; // distance from the centre < radius
    Order bfs_order;            // constructing, delta = parent
};

/// Ball of the d-regular tree around vertex 0 with ids in BFS order.
TreeBall leafless_tree_ball(int degree, int radius);

} // namespace copwin
