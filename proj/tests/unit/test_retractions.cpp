#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

#include "copwin/errors.hpp"
#include "copwin/generators.hpp"
#include "copwin/orders.hpp"
#include "copwin/retractions.hpp"

using namespace copwin;
using testing::graph;
using testing::id;

TEST_CASE("constructing rho") {
    Family h = h_block();
    RetractionFamily f(*h.order);
    for (Vertex mu = 0; mu < 11; ++mu) {
        CHECK(f.rho(1, mu) == id(h.graph, "a_0"));
        for (Rank nu = 1; nu <= 11; ++nu)
            if (h.order->rank(mu) < nu)
                CHECK(f.rho(nu, mu) == mu);
    }

    Family p3 = path_graph(3);
    RetractionFamily fp(*p3.order);
    CHECK(fp.rho(1, 2) == 0);
    CHECK(fp.steps(1, 2) == 2);
    CHECK(fp.rho(2, 2) == 1);
    CHECK(fp.rho(3, 2) == 2);
    CHECK(fp.rho(99, 2) == 2);
    CHECK_THROWS_AS(fp.rho(0, 2), DomainError);
    CHECK_THROWS_AS(fp.rho(1, 3), DomainError);
}

TEST_CASE("rho matches direct iteration") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Family f = random_constructible(3 + static_cast<int>(seed % 15), seed);
        RetractionFamily fam(*f.order);
        for (Rank nu = fam.min_rank(); nu <= fam.max_rank(); ++nu)
            for (Vertex mu = 0; mu < static_cast<Vertex>(f.graph.order()); ++mu)
                CHECK(fam.rho(nu, mu) == oracle::rho(*f.order, nu, mu));
    }
}

TEST_CASE("check_retraction") {
    Graph g = random_connected(7, 0.4, 3);
    std::vector<Vertex> identity{0, 1, 2, 3, 4, 5, 6};
    CHECK(check_retraction(g, identity, identity));

    Family ab = ab_graph(9);
    CHECK(check_retraction(ab.graph, ab.retraction, ab.retract_target));
    Subgraph c4 = induced_subgraph(ab.graph, ab.retract_target);
    CHECK(c4.graph.edge_count() == 4);
    for (Vertex v = 0; v < 4; ++v)
        CHECK(c4.graph.degree(v) == 2);

    Graph cycle = cycle_graph(4).graph;
    std::vector<Vertex> target{1, 2, 3};
    std::vector<Vertex> folded{2, 1, 2, 3};
    CHECK(check_retraction(cycle, folded, target));
    std::vector<Vertex> broken{3, 1, 2, 3};
    CHECK_FALSE(check_retraction(cycle, broken, target));
    std::vector<Vertex> escaping{0, 1, 2, 3};
    CHECK_FALSE(check_retraction(cycle, escaping, target));
    std::vector<Vertex> moves_target{1, 1, 2, 3};
    std::vector<Vertex> all{0, 1, 2, 3};
    CHECK_FALSE(check_retraction(cycle, moves_target, all));
}

TEST_CASE("constructing rho is a retraction onto the prefix") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Family f = random_constructible(3 + static_cast<int>(seed % 20), seed * 7 + 1);
        RetractionFamily fam(*f.order);
        const auto n = static_cast<Rank>(f.graph.order());
        for (Rank nu = 1; nu <= n; ++nu) {
            auto map = fam.map(nu);
            auto target = fam.retract(nu);
            CHECK(check_retraction(f.graph, map, target));
            for (Rank lower = 1; lower <= nu; ++lower)
                for (Vertex mu = 0; mu < n; ++mu)
                    CHECK(fam.rho(lower, map[static_cast<std::size_t>(mu)]) == fam.rho(lower, mu));
        }
        // Shift: mu ~ eta implies rho_nu(mu) ~ rho_{nu+1}(eta).
        CHECK(check_shifted_edge_property(fam, f.graph));
    }
}

TEST_CASE("dismantling rho on the ray") {
    Family ray = ray_dismantling(10);
    RetractionFamily f(*ray.order);
    CHECK(f.rho(5, 3) == 5);
    CHECK(f.steps(5, 3) == 2);
    CHECK(f.rho(4, 4) == 4);
    CHECK(ray.graph.adjacent(f.rho(5, 3), f.rho(4, 4)));
    CHECK(f.rho(0, 7) == 7);
    CHECK(check_shifted_edge_property(f, ray.graph, 0, 9));
    CHECK(check_shifted_edge_property(f, ray.graph));
}

TEST_CASE("shifted-edge property on dismantlable graphs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Family f = random_constructible(3 + static_cast<int>(seed % 15), seed + 100);
        auto dis = find_dismantling_order(f.graph);
        REQUIRE(dis);
        RetractionFamily fam(*dis);
        CHECK(check_shifted_edge_property(fam, f.graph, 0, fam.max_rank() - 1));
        for (Rank nu = 0; nu <= fam.max_rank(); ++nu)
            CHECK(check_retraction(f.graph, fam.map(nu), fam.retract(nu)));
    }
}

TEST_CASE("a/b graph family is total only inside the window") {
    Family ab = ab_graph(9);
    RetractionFamily f(*ab.order);
    for (Rank nu = 0; nu <= 9; ++nu)
        CHECK(f.total_at(nu));
    CHECK_FALSE(f.total_at(10));
    CHECK(check_shifted_edge_property(f, ab.graph, 0, 8));
    CHECK_THROWS_AS(check_shifted_edge_property(f, ab.graph, 0, 9), NonTotalRetraction);
    try {
        f.rho(10, 0);
        FAIL("expected NonTotalRetraction");
    } catch (const NonTotalRetraction& e) {
        CHECK(e.rank() == 10);
        CHECK(e.vertex() == 0);
    }
}

TEST_CASE("shifted-edge failures are reported") {
    // A dismantling "order" on C_4 with an invented domination map.
    Graph c4 = cycle_graph(4).graph;
    Order fake(Flavor::dismantling, {0, 1, 2, 3}, {1, 2, 3, kNoVertex});
    RetractionFamily f(fake);
    auto r = check_shifted_edge_property(f, c4, 0, 2);
    CHECK_FALSE(r);
    CHECK(r.message.find("not adjacent") != std::string::npos);
}
