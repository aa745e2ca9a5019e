#include "doctest.h"
#include "helpers.hpp"

#include "copwin/errors.hpp"
#include "copwin/generators.hpp"
#include "copwin/orders.hpp"
#include "copwin/timing.hpp"

#include <memory>

using namespace copwin;
using testing::graph;

namespace {

ProtectiveCop protective(const Order& o) { return ProtectiveCop(std::make_shared<RetractionFamily>(o)); }

class IdleCop final : public CopStrategy {
public:
    std::string_view name() const override { return "idle"; }
    Vertex start() const override { return 0; }
    Vertex move(Vertex c, Vertex, Round) const override { return c; }
};

} // namespace

TEST_CASE("single vertex") {
    Family k1 = complete_graph(1);
    TimingProfile p = estimate_timing(k1.graph, protective(*k1.order), 4);
    CHECK(p.t_c == std::vector<Round>{0});
    CHECK(p.t_r_lower == std::vector<Round>{-1});
    CHECK(p.total());
}

TEST_CASE("protective timing on P3") {
    Family p3 = path_graph(3);
    TimingProfile p = estimate_timing(p3.graph, protective(*p3.order), 12);
    CHECK(p.t_c == std::vector<Round>{0, 2, 4});
    CHECK(p.t_c_max == std::vector<Round>{0, 2, 4});
    // A robber on v1 after round 1 is caught at round 2; one on v2 after
    // round 3 is caught at round 4.
    CHECK(p.t_r_lower == std::vector<Round>{-1, -1, 1});
    CHECK(p.total());
    Order back = order_from_protective(p3.graph, p);
    CHECK(back == *p3.order);
}

TEST_CASE("timing roundtrip on random constructible graphs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Family f = random_constructible(3 + static_cast<int>(seed % 10), seed + 40);
        Order natural = naturalize_order(f.graph, *f.order).order;
        const auto n = static_cast<Round>(f.graph.order());
        TimingProfile p = estimate_timing(f.graph, protective(natural), 4 * n);
        CHECK(p.total());
        for (Vertex v = 0; v < n; ++v) {
            CHECK(p.t_c[static_cast<std::size_t>(v)] == 2 * natural.rank(v));
            CHECK(p.t_r_lower[static_cast<std::size_t>(v)] <= 2 * natural.rank(v) - 1);
        }
        Order back = order_from_protective(f.graph, p);
        CHECK(verify_dominating_order(f.graph, back));
    }
}

TEST_CASE("non-protective strategies are diagnosed") {
    Graph p3 = path_graph(3).graph;
    TimingProfile p = estimate_timing(p3, IdleCop{}, 12);
    CHECK_FALSE(p.total());
    CHECK(p.t_r_open[2]);
    CHECK(p.t_c[2] == -1);
    CHECK_THROWS_AS(order_from_protective(p3, p), DomainError);

    // A forged total profile whose ranking no order can honour.
    Graph c4 = cycle_graph(4).graph;
    TimingProfile forged;
    forged.horizon = 16;
    forged.t_r_lower = {-1, 1, 3, 5};
    forged.t_r_open = {0, 0, 0, 0};
    forged.t_c = {0, 2, 4, 6};
    forged.t_c_max = forged.t_c;
    CHECK_THROWS_AS(order_from_protective(c4, forged), TheoremContradiction);
}

TEST_CASE("late robbery probe") {
    std::size_t total = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Family f = random_constructible(4 + static_cast<int>(seed), seed + 90);
        Order natural = naturalize_order(f.graph, *f.order).order;
        LateRobberyProbe probe =
            probe_late_robbery(f.graph, protective(natural), natural, 20, 4 * static_cast<Round>(f.graph.order()), seed);
        CHECK(probe.trajectories == 20);
        CHECK(probe.captures == probe.checks);
        total += probe.checks;
    }
    CHECK(total > 0);
    // The idle cop misses late robberies.
    Family p3 = path_graph(3);
    LateRobberyProbe idle = probe_late_robbery(p3.graph, IdleCop{}, *p3.order, 10, 20, 1);
    CHECK(idle.captures < idle.checks);
}
