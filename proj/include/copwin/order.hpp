#pragma once

#include "copwin/graph.hpp"

#include <span>
#include <vector>

namespace copwin {

/// Constructing orders grow the graph from rank 0 (each vertex dominated in
/// its prefix); dismantling orders peel it from rank 0 (each vertex dominated
/// in its suffix).
enum class Flavor { constructing, dismantling };

const char* to_string(Flavor f) noexcept;

/// A vertex sequence together with its domination map.
///
/// `delta(v)` is kNoVertex for the terminal vertex (rank 0 when constructing,
/// last rank when dismantling) and for any vertex whose dominator lies outside
/// a truncated window. The sequence must be a permutation of 0..size()-1;
/// anything else throws DomainError at construction.
class Order {
public:
    Order() = default;
    Order(Flavor flavor, std::vector<Vertex> sequence, std::vector<Vertex> delta);

    Flavor flavor() const noexcept { return flavor_; }
    std::size_t size() const noexcept { return sequence_.size(); }

    std::span<const Vertex> sequence() const noexcept { return sequence_; }
    std::span<const Vertex> delta_map() const noexcept { return delta_; }

    Vertex at(Rank r) const;
    Rank rank(Vertex v) const;
    Vertex delta(Vertex v) const;
    bool has_delta(Vertex v) const { return delta(v) != kNoVertex; }

    /// Where every domination chain ends.
    Vertex terminal() const;

    bool operator==(const Order&) const = default;

private:
    Flavor flavor_ = Flavor::constructing;
    std::vector<Vertex> sequence_;
    std::vector<Rank> rank_;
    std::vector<Vertex> delta_;
};

} // namespace copwin
