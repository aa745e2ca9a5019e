#include "copwin/timing.hpp"

#include "copwin/errors.hpp"
#include "copwin/orders.hpp"
#include "copwin/random.hpp"

#include <algorithm>
#include <numeric>

namespace copwin {

bool TimingProfile::total() const {
    return std::none_of(t_r_open.begin(), t_r_open.end(), [](char c) { return c != 0; });
}

namespace {

/// Set of live (cop, robber) configurations.
class StateSet {
public:
    explicit StateSet(std::size_t n) : n_(n), bits_(n * n, 0) {}

    void insert(Vertex c, Vertex r) {
        auto& b = bits_[static_cast<std::size_t>(c) * n_ + static_cast<std::size_t>(r)];
        if (!b) {
            b = 1;
            list_.emplace_back(c, r);
        }
    }
    const std::vector<std::pair<Vertex, Vertex>>& items() const { return list_; }
    bool empty() const { return list_.empty(); }

private:
    std::size_t n_;
    std::vector<char> bits_;
    std::vector<std::pair<Vertex, Vertex>> list_;
};

Vertex cop_reply(const Graph& g, const CopStrategy& cop, Vertex c, Vertex r, Round round) {
    Vertex next = cop.move(c, r, round);
    if (!g.contains(next) || !g.adjacent(c, next))
        throw StrategyError("cop moved illegally from " + std::to_string(c) + " at round " + std::to_string(round));
    return next;
}

StateSet robber_placements(const Graph& g, Vertex c0) {
    StateSet s(g.order());
    for (Vertex r0 = 0; r0 < static_cast<Vertex>(g.order()); ++r0)
        if (r0 != c0)
            s.insert(c0, r0);
    return s;
}

StateSet robber_round(const Graph& g, const StateSet& before) {
    StateSet after(g.order());
    for (auto [c, r] : before.items())
        for (Vertex next : g.neighbors(r))
            if (next != c)
                after.insert(c, next);
    return after;
}

// Latest first arrival of the cop at `target`, or -1.
Round latest_arrival(const Graph& g, const CopStrategy& cop, Vertex target, Round horizon) {
    const Vertex c0 = cop.start();
    if (c0 == target)
        return 0;
    Round latest = -1;
    StateSet s = robber_placements(g, c0);
    for (Round t = 1; t + 1 <= horizon && !s.empty(); t += 2) {
        StateSet after_cop(g.order());
        for (auto [c, r] : s.items()) {
            Vertex next = cop_reply(g, cop, c, r, t + 1);
            if (next == target)
                latest = t + 1;
            else if (next != r)
                after_cop.insert(next, r);
        }
        if (t + 2 > horizon)
            break;
        s = robber_round(g, after_cop);
    }
    return latest;
}

} // namespace

TimingProfile estimate_timing(const Graph& g, const CopStrategy& cop, Round horizon) {
    if (horizon < 2)
        throw DomainError("timing horizon must be at least 2");
    const std::size_t n = g.order();
    TimingProfile p;
    p.horizon = horizon;
    p.t_r_lower.assign(n, -1);
    p.t_r_open.assign(n, 0);
    p.t_c.assign(n, -1);
    p.t_c_max.assign(n, -1);

    const Vertex c0 = cop.start();
    g.require(c0);
    p.t_c[static_cast<std::size_t>(c0)] = 0;
    const Round last_checkable = (horizon - 1) % 2 == 1 ? horizon - 1 : horizon - 2;

    StateSet s = robber_placements(g, c0);
    for (Round t = 1; t + 1 <= horizon && !s.empty(); t += 2) {
        StateSet after_cop(n);
        for (auto [c, r] : s.items()) {
            Vertex next = cop_reply(g, cop, c, r, t + 1);
            auto& tc = p.t_c[static_cast<std::size_t>(next)];
            if (tc < 0)
                tc = t + 1;
            if (next != r) {
                p.t_r_lower[static_cast<std::size_t>(r)] = t;
                if (t == last_checkable)
                    p.t_r_open[static_cast<std::size_t>(r)] = 1;
                after_cop.insert(next, r);
            }
        }
        if (t + 2 > horizon)
            break;
        s = robber_round(g, after_cop);
    }

    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v)
        p.t_c_max[static_cast<std::size_t>(v)] = latest_arrival(g, cop, v, horizon);
    return p;
}

Order order_from_protective(const Graph& g, const TimingProfile& profile) {
    const std::size_t n = g.order();
    if (profile.t_r_lower.size() != n || profile.t_c.size() != n)
        throw DomainError("timing profile does not match the graph");
    if (!profile.total())
        throw DomainError("timing profile is not total: some vertex can still be robbed at the horizon");

    auto attempt = [&](bool by_t_c) {
        std::vector<Vertex> sequence(n);
        std::iota(sequence.begin(), sequence.end(), 0);
        std::stable_sort(sequence.begin(), sequence.end(), [&](Vertex a, Vertex b) {
            auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
            if (profile.t_r_lower[ua] != profile.t_r_lower[ub])
                return profile.t_r_lower[ua] < profile.t_r_lower[ub];
            if (by_t_c)
                return profile.t_c[ua] < profile.t_c[ub];
            return false;
        });
        return assign_domination_map(g, std::move(sequence), Flavor::constructing);
    };

    Order first = attempt(false);
    auto check = verify_dominating_order(g, first);
    if (check)
        return first;
    Order second = attempt(true);
    if (verify_dominating_order(g, second))
        return second;
    throw TheoremContradiction("order recovered from timing profile fails at rank " + std::to_string(check.rank) +
                               ": " + check.message);
}

LateRobberyProbe probe_late_robbery(const Graph& g, const CopStrategy& cop, const Order& order,
                                    std::size_t trajectories, Round horizon, std::uint64_t seed) {
    Rng rng(seed);
    LateRobberyProbe out;
    const std::size_t n = g.order();
    auto forced = [&](Vertex c, Vertex v, Round t) {
        if (v == c || t < 2 * order.rank(v) + 1 || t + 1 > horizon)
            return;
        ++out.checks;
        if (cop_reply(g, cop, c, v, t + 1) == v)
            ++out.captures;
    };
    for (std::size_t i = 0; i < trajectories; ++i) {
        ++out.trajectories;
        Vertex c = cop.start();
        for (Vertex v = 0; v < static_cast<Vertex>(n); ++v)
            forced(c, v, 1);
        Vertex r = static_cast<Vertex>(rng.below(n));
        if (r == c)
            continue;
        for (Round t = 2; t <= horizon; t += 2) {
            c = cop_reply(g, cop, c, r, t);
            if (c == r)
                break;
            auto options = g.neighbors(r);
            for (Vertex v : options)
                forced(c, v, t + 1);
            options.erase(std::remove(options.begin(), options.end(), c), options.end());
            r = options[static_cast<std::size_t>(rng.below(options.size()))];
        }
    }
    return out;
}

} // namespace copwin
