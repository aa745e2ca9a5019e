#pragma once

#include "copwin/graph.hpp"
#include "copwin/order.hpp"

#include <initializer_list>
#include <vector>

namespace testing {

inline copwin::Graph graph(std::size_t n, std::initializer_list<copwin::Edge> edges) {
    std::vector<copwin::Edge> e(edges);
    return copwin::Graph(n, e);
}

inline copwin::Vertex id(const copwin::Graph& g, const char* label) { return g.find(label).value(); }

} // namespace testing
