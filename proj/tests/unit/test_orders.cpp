#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

#include "copwin/errors.hpp"
#include "copwin/generators.hpp"
#include "copwin/orders.hpp"

using namespace copwin;
using testing::graph;
using testing::id;

TEST_CASE("find_dominating_order") {
    Graph one(1, std::vector<Edge>{});
    auto o = find_dominating_order(one);
    REQUIRE(o);
    CHECK(o->size() == 1);
    CHECK(o->at(0) == 0);
    CHECK_FALSE(o->has_delta(0));

    CHECK_FALSE(find_dominating_order(cycle_graph(4).graph));
    CHECK_FALSE(oracle::nowakowski_winkler(cycle_graph(4).graph));

    Family h = h_block();
    auto found = find_dominating_order(h.graph);
    REQUIRE(found);
    CHECK(verify_dominating_order(h.graph, *found));
    CHECK(verify_dominating_order(h.graph, *h.order));
}

TEST_CASE("shipped H order and domination map") {
    Family h = h_block();
    const Graph& g = h.graph;
    const Order& o = *h.order;
    std::vector<std::string> names;
    for (Vertex v : o.sequence())
        names.push_back(g.name(v));
    CHECK(names == std::vector<std::string>{"a_0", "b_4", "c", "b_0", "b_1", "b_2", "b_3", "a_1", "a_2", "a_3", "a_4"});
    auto d = [&](const char* v) { return g.name(o.delta(id(g, v))); };
    CHECK(d("b_4") == "a_0");
    CHECK(d("c") == "b_4");
    CHECK(d("b_0") == "b_4");
    CHECK(d("b_1") == "b_0");
    CHECK(d("b_2") == "b_1");
    CHECK(d("b_3") == "c");
    CHECK(d("a_1") == "b_1");
    CHECK(d("a_2") == "b_2");
    CHECK(d("a_3") == "b_3");
    CHECK(d("a_4") == "b_4");

    // Per-rank neighbourhood containment read straight off the adjacency.
    auto a = oracle::matrix(g);
    for (Rank i = 1; i < 11; ++i) {
        Vertex v = o.at(i), u = o.delta(v);
        CHECK(o.rank(u) < i);
        CHECK(a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]);
        for (Rank j = 0; j <= i; ++j) {
            Vertex w = o.at(j);
            if (a[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)])
                CHECK(a[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)]);
        }
    }
}

TEST_CASE("verify_dominating_order reports the first bad rank") {
    Graph p3 = graph(3, {{0, 1}, {1, 2}});
    Order ok = assign_domination_map(p3, {1, 0, 2}, Flavor::constructing);
    CHECK(verify_dominating_order(p3, ok));

    Order bad = assign_domination_map(p3, {0, 2, 1}, Flavor::constructing);
    auto r = verify_dominating_order(p3, bad);
    CHECK_FALSE(r);
    CHECK(r.rank == 1);
    CHECK(r.vertex == 2);

    // A delta pointing forward is caught even though the vertex has an
    // earlier dominator.
    Order forward(Flavor::constructing, {0, 1, 2}, {kNoVertex, 2, 1});
    CHECK(verify_dominating_order(p3, forward).rank == 1);

    CHECK_THROWS_AS(Order(Flavor::constructing, {0, 0, 1}, {kNoVertex, kNoVertex, kNoVertex}), DomainError);
    CHECK_THROWS_AS(verify_dominating_order(p3, Order(Flavor::constructing, {0, 1}, {kNoVertex, 0})), DomainError);
}

TEST_CASE("greedy orders agree with the cop-win oracle") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        int n = 2 + static_cast<int>(seed % 8);
        Graph g = random_connected(n, 0.2 + 0.1 * static_cast<double>(seed % 5), seed);
        auto dom = find_dominating_order(g);
        auto dis = find_dismantling_order(g);
        bool expected = oracle::nowakowski_winkler(g);
        CHECK(dom.has_value() == expected);
        CHECK(dis.has_value() == expected);
        CHECK(oracle::dismantlable(g) == expected);
        if (dom) {
            CHECK(verify_dominating_order(g, *dom));
            CHECK(verify_dismantling_order(g, *dis));
            CHECK(verify_dismantling_order(g, reversed(*dom)));
            CHECK(verify_dominating_order(g, reversed(*dis)));
        }
    }
}

TEST_CASE("find_dismantling_order") {
    CHECK(find_dismantling_order(complete_graph(3).graph));
    CHECK_FALSE(find_dismantling_order(cycle_graph(4).graph));
    Family ab = ab_graph(9);
    CHECK(verify_dismantling_order(ab.graph, *ab.order, ab.exempt));
    std::vector<std::string> names;
    for (Vertex v : ab.order->sequence())
        names.push_back(ab.graph.name(v));
    CHECK(names.front() == "a_0");
    CHECK(names[9] == "a_9");
    CHECK(names.back() == "b_2");
    // Without the exemption the cut vertex a_9 is reported.
    auto r = verify_dismantling_order(ab.graph, *ab.order);
    CHECK_FALSE(r);
    CHECK(ab.graph.name(r.vertex) == "a_9");
}

TEST_CASE("naturalize_order") {
    Family p = path_graph(6);
    NaturalizedOrder n = naturalize_order(p.graph, *p.order);
    CHECK(n.order == *p.order);
    CHECK(n.level == std::vector<int>{0, 1, 2, 3, 4, 5});

    Family star = star_graph(4);
    NaturalizedOrder s = naturalize_order(star.graph, *star.order);
    CHECK(s.level == std::vector<int>{0, 1, 1, 1, 1});
    CHECK(std::vector<Vertex>(s.order.sequence().begin(), s.order.sequence().end()) ==
          std::vector<Vertex>{0, 1, 2, 3, 4});

    Order wrong = assign_domination_map(p.graph, {0, 2, 1, 3, 4, 5}, Flavor::constructing);
    CHECK_THROWS_AS(naturalize_order(p.graph, wrong), DomainError);
}

TEST_CASE("naturalize_order properties") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Family f = random_constructible(4 + static_cast<int>(seed % 20), seed);
        // Shuffle the ranks while keeping a valid order: use a BFS-free greedy order.
        Order o = *find_dominating_order(f.graph);
        NaturalizedOrder n = naturalize_order(f.graph, o);
        CHECK(verify_dominating_order(f.graph, n.order));
        CHECK(n.level[static_cast<std::size_t>(o.at(0))] == 0);
        auto dist = oracle::bfs(f.graph, o.at(0));
        for (Vertex v = 0; v < static_cast<Vertex>(f.graph.order()); ++v) {
            CHECK(n.level[static_cast<std::size_t>(v)] >= dist[static_cast<std::size_t>(v)]);
            // Earlier neighbours under the new order are exactly the old earlier
            // neighbours of strictly smaller level.
            for (Vertex w : f.graph.open_neighbors(v)) {
                bool new_earlier = n.order.rank(w) < n.order.rank(v);
                bool old_earlier = o.rank(w) < o.rank(v);
                bool smaller = n.level[static_cast<std::size_t>(w)] < n.level[static_cast<std::size_t>(v)];
                CHECK(new_earlier == (old_earlier && smaller));
            }
        }
    }
}

TEST_CASE("depth_table") {
    Family h = h_block();
    DepthTable d = depth_table(*h.order);
    CHECK(d[id(h.graph, "a_0")] == 0);
    CHECK(d[id(h.graph, "a_2")] == 5);
    CHECK(d[id(h.graph, "a_2")] == d[id(h.graph, "b_2")] + 1);

    Family p = path_graph(7);
    DepthTable dp = depth_table(*p.order);
    for (Vertex v = 0; v < 7; ++v)
        CHECK(dp[v] == v);

    Family ray = ray_dismantling(5);
    DepthTable dr = depth_table(*ray.order);
    CHECK(dr[5] == 0);
    CHECK(dr[0] == 5);

    Order cyclic(Flavor::constructing, {0, 1, 2}, {kNoVertex, 2, 1});
    CHECK_THROWS_AS(depth_table(cyclic), InvalidOrder);
}
