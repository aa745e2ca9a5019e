#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

#include "copwin/errors.hpp"
#include "copwin/generators.hpp"
#include "copwin/graph.hpp"
#include "copwin/lazy_graph.hpp"

#include <algorithm>

using namespace copwin;
using testing::graph;
using testing::id;

TEST_CASE("neighbors are closed") {
    Graph p3 = graph(3, {{0, 1}, {1, 2}});
    CHECK(p3.neighbors(1) == std::vector<Vertex>{0, 1, 2});
    CHECK(p3.neighbors(0) == std::vector<Vertex>{0, 1});

    Graph one(1, std::vector<Edge>{});
    CHECK(one.neighbors(0) == std::vector<Vertex>{0});

    Graph h = h_block().graph;
    std::vector<Vertex> expected{id(h, "c"), id(h, "b_0"), id(h, "b_1"), id(h, "b_2"), id(h, "b_3"), id(h, "b_4")};
    std::sort(expected.begin(), expected.end());
    CHECK(h.neighbors(id(h, "c")) == expected);

    CHECK_THROWS_AS(p3.neighbors(3), DomainError);
    CHECK_THROWS_AS(p3.neighbors(-1), DomainError);
}

TEST_CASE("loops and duplicate edges are ignored") {
    Graph g = graph(2, {{0, 0}, {0, 1}, {1, 0}});
    CHECK(g.edge_count() == 1);
    CHECK(g.adjacent(0, 0));
    CHECK(g.degree(0) == 1);
    CHECK_THROWS_AS(graph(2, {{0, 2}}), DomainError);
}

TEST_CASE("dominates") {
    Graph k3 = complete_graph(3).graph;
    for (Vertex u = 0; u < 3; ++u)
        for (Vertex v = 0; v < 3; ++v)
            CHECK(dominates(k3, u, v) == (u != v));

    Graph c4 = cycle_graph(4).graph;
    for (Vertex u = 0; u < 4; ++u)
        for (Vertex v = 0; v < 4; ++v)
            CHECK_FALSE(dominates(c4, u, v));

    Graph h = h_block().graph;
    std::vector<Vertex> s{id(h, "a_0"), id(h, "b_4")};
    Subgraph sub = induced_subgraph(h, s);
    CHECK(dominates(sub.graph, sub.from_parent[static_cast<std::size_t>(id(h, "a_0"))],
                    sub.from_parent[static_cast<std::size_t>(id(h, "b_4"))]));
}

TEST_CASE("dominates agrees with neighbourhood containment") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Graph g = random_connected(8, 0.35, seed);
        std::vector<char> alive(g.order(), 1);
        auto a = oracle::matrix(g);
        for (Vertex u = 0; u < 8; ++u)
            for (Vertex v = 0; v < 8; ++v) {
                bool d = dominates(g, u, v);
                CHECK(d == oracle::dominates(a, static_cast<std::size_t>(u), static_cast<std::size_t>(v), alive));
                if (d) {
                    auto nu = g.neighbors(u), nv = g.neighbors(v);
                    CHECK(std::includes(nu.begin(), nu.end(), nv.begin(), nv.end()));
                }
            }
    }
}

TEST_CASE("induced subgraph") {
    Graph p3 = graph(3, {{0, 1}, {1, 2}});
    std::vector<Vertex> all{0, 1, 2};
    CHECK(induced_subgraph(p3, all).graph.edges() == p3.edges());

    std::vector<Vertex> ends{0, 2};
    Subgraph s = induced_subgraph(p3, ends);
    CHECK(s.graph.order() == 2);
    CHECK(s.graph.edge_count() == 0);
    CHECK(s.to_parent == std::vector<Vertex>{0, 2});

    Graph h = h_block().graph;
    std::vector<Vertex> first{id(h, "a_0"), id(h, "b_4"), id(h, "c")};
    Subgraph t = induced_subgraph(h, first);
    CHECK(t.graph.edge_count() == 2);
    auto in_sub = [&](const char* name) { return t.from_parent[static_cast<std::size_t>(id(h, name))]; };
    CHECK(t.graph.adjacent(in_sub("a_0"), in_sub("b_4")));
    CHECK(t.graph.adjacent(in_sub("b_4"), in_sub("c")));
    CHECK_FALSE(t.graph.adjacent(in_sub("a_0"), in_sub("c")));
    CHECK(t.graph.name(in_sub("c")) == "c");

    CHECK_THROWS_AS(induced_subgraph(h, std::vector<Vertex>{}), DomainError);
}

TEST_CASE("induced subgraph is functorial on nested sets") {
    Graph g = random_connected(10, 0.3, 7);
    std::vector<Vertex> outer{0, 2, 3, 5, 7, 8, 9};
    std::vector<Vertex> inner{2, 5, 8, 9};
    Subgraph big = induced_subgraph(g, outer);
    std::vector<Vertex> inner_in_big;
    for (Vertex v : inner)
        inner_in_big.push_back(big.from_parent[static_cast<std::size_t>(v)]);
    Subgraph twice = induced_subgraph(big.graph, inner_in_big);
    Subgraph direct = induced_subgraph(g, inner);
    CHECK(twice.graph.edges() == direct.graph.edges());
}

TEST_CASE("distances") {
    Graph p5 = path_graph(5).graph;
    CHECK(p5.distances_from(0) == std::vector<int>{0, 1, 2, 3, 4});
    DistanceMatrix d(p5);
    CHECK(d(1, 4) == 3);
    Graph split = graph(3, {{0, 1}});
    CHECK_FALSE(split.connected());
    CHECK(split.distances_from(0)[2] == -1);
}

TEST_CASE("balls of lazy graphs") {
    Ball b0 = ball(t5_of_h(), 0);
    CHECK(b0.graph.order() == 1);
    CHECK(b0.graph.edge_count() == 0);

    Ball r3 = ball(ray(), 3);
    CHECK(r3.graph.order() == 4);
    CHECK(r3.graph.edges() == path_graph(4).graph.edges());
    CHECK(r3.keys == std::vector<Key>{"a_0", "a_1", "a_2", "a_3"});

    // Radius 3 from a_0 of the root copy reaches all of it.
    Ball t = ball(t5_of_h(), 3);
    Graph h = h_block().graph;
    std::vector<Vertex> copy;
    for (Vertex v = 0; v < static_cast<Vertex>(h.order()); ++v)
        copy.push_back(t.id(":" + h.name(v)));
    Subgraph s = induced_subgraph(t.graph, copy);
    // Relabel through names so the comparison is by H vertex.
    std::vector<Edge> edges;
    for (auto [u, v] : s.graph.edges()) {
        auto name = [&](Vertex x) { return s.graph.name(x).substr(1); };
        Vertex a = id(h, name(u).c_str()), b = id(h, name(v).c_str());
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    CHECK(edges == h.edges());
}

TEST_CASE("balls are nested") {
    for (const LazyGraph& lg : {t5_of_h(), ray()}) {
        Ball small = ball(lg, 2);
        Ball big = ball(lg, 3);
        for (auto [u, v] : small.graph.edges())
            CHECK(big.graph.adjacent(big.id(small.keys[static_cast<std::size_t>(u)]),
                                     big.id(small.keys[static_cast<std::size_t>(v)])));
        for (std::size_t i = 0; i < small.keys.size(); ++i)
            for (std::size_t j = i + 1; j < small.keys.size(); ++j)
                CHECK(small.graph.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ==
                      big.graph.adjacent(big.id(small.keys[i]), big.id(small.keys[j])));
    }
}

TEST_CASE("ball rejects broken oracles") {
    LazyGraph asym;
    asym.root = "x";
    asym.neighbors = [](const Key& k) {
        return k == "x" ? std::vector<Key>{"x", "y"} : std::vector<Key>{k};
    };
    asym.canonical_order = [](const Key& k) { return k == "x" ? 0u : 1u; };
    CHECK_THROWS_AS(ball(asym, 1), GeneratorContractViolation);

    LazyGraph loopless = asym;
    loopless.neighbors = [](const Key&) { return std::vector<Key>{}; };
    CHECK_THROWS_AS(ball(loopless, 1), GeneratorContractViolation);

    LazyGraph wide;
    wide.root = "0";
    wide.neighbors = [](const Key& k) {
        std::vector<Key> out{k};
        if (k == "0")
            for (int i = 1; i <= 50; ++i)
                out.push_back(std::to_string(i));
        else
            out.push_back("0");
        return out;
    };
    wide.canonical_order = [](const Key& k) { return static_cast<std::uint64_t>(std::stoi(k)); };
    CHECK_THROWS_AS(ball(wide, 1, 1000, 10), GeneratorContractViolation);
    CHECK_THROWS_AS(ball(wide, 1, 20), GeneratorContractViolation);
    CHECK(ball(wide, 1).graph.order() == 51);
    CHECK_THROWS_AS(ball(wide, -1), DomainError);
}
