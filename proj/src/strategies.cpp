#include "copwin/strategies.hpp"

#include "copwin/errors.hpp"

#include <algorithm>
#include <string>

namespace copwin {

namespace {

void require_same_size(const Graph& g, const RetractionFamily& family) {
    if (family.size() != g.order())
        throw DomainError("order and graph differ in size");
}

} // namespace

Vertex s_star_move(const Graph& g, const RetractionFamily& family, Vertex c, Vertex r) {
    g.require(c);
    g.require(r);
    for (Vertex v : family.chain(r))
        if (g.adjacent(c, v))
            return v;
    throw StrategyError("s*: no vertex on the domination chain of " + g.name(r) + " is adjacent to " + g.name(c));
}

Vertex recursive_s_move(const Graph& g, const Order& order, Vertex c, Vertex r) {
    g.require(c);
    g.require(r);
    if (order.flavor() != Flavor::constructing)
        throw DomainError("recursive s needs a constructing order");
    // Unrolled recursion: s_nu reduces to s_{nu-1}, replacing r by delta(r)
    // exactly when r is the top vertex of G_{<nu} and not adjacent to c.
    for (Rank nu = static_cast<Rank>(order.size()); nu >= 1; --nu) {
        if (order.rank(r) != nu - 1)
            continue;
        if (g.adjacent(c, r))
            return r;
        Vertex next = order.delta(r);
        if (next == kNoVertex)
            break;
        r = next;
    }
    throw StrategyError("recursive s undefined at cop " + g.name(c));
}

Vertex protective_move(const RetractionFamily& family, Vertex r, Round round) {
    if (family.flavor() != Flavor::constructing)
        throw DomainError("protective strategy needs a constructing order");
    if (round < 0 || round % 2 != 0)
        throw DomainError("protective strategy moves at even rounds, got " + std::to_string(round));
    return family.rho(round / 2 + 1, r);
}

Vertex dismantable_move(const Graph& g, const RetractionFamily& family, Vertex c, Vertex r) {
    g.require(c);
    g.require(r);
    for (Vertex v : family.chain(r))
        if (g.adjacent(c, v))
            return v;
    Vertex next = family.order().delta(c);
    if (next == kNoVertex)
        throw StrategyError("dismantable: cop at " + g.name(c) + " has no dominator and no chain vertex is in reach");
    return next;
}

SStarCop::SStarCop(const Graph& g, std::shared_ptr<const RetractionFamily> family) : g_(&g), family_(std::move(family)) {
    require_same_size(g, *family_);
}

Vertex SStarCop::start() const { return family_->order().at(0); }

Vertex SStarCop::move(Vertex c, Vertex r, Round) const { return s_star_move(*g_, *family_, c, r); }

RecursiveSCop::RecursiveSCop(const Graph& g, std::shared_ptr<const RetractionFamily> family)
    : g_(&g), family_(std::move(family)) {
    require_same_size(g, *family_);
}

Vertex RecursiveSCop::start() const { return family_->order().at(0); }

Vertex RecursiveSCop::move(Vertex c, Vertex r, Round) const {
    const std::int64_t key = static_cast<std::int64_t>(c) * static_cast<std::int64_t>(g_->order()) + r;
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;
    Vertex v = recursive_s_move(*g_, family_->order(), c, r);
    memo_.emplace(key, v);
    return v;
}

ProtectiveCop::ProtectiveCop(std::shared_ptr<const RetractionFamily> family) : family_(std::move(family)) {
    if (family_->flavor() != Flavor::constructing)
        throw DomainError("protective strategy needs a constructing order");
}

Vertex ProtectiveCop::start() const { return family_->order().at(0); }

Vertex ProtectiveCop::move(Vertex, Vertex r, Round round) const { return protective_move(*family_, r, round); }

DismantableCop::DismantableCop(const Graph& g, std::shared_ptr<const RetractionFamily> family)
    : g_(&g), family_(std::move(family)) {
    require_same_size(g, *family_);
}

Vertex DismantableCop::start() const { return family_->order().at(0); }

Vertex DismantableCop::move(Vertex c, Vertex r, Round) const { return dismantable_move(*g_, *family_, c, r); }

// ---------------------------------------------------------------------------

namespace {

Vertex farthest_from(const Graph& g, Vertex cop) {
    auto d = g.distances_from(cop);
    Vertex best = 0;
    for (Vertex v = 1; v < static_cast<Vertex>(g.order()); ++v)
        if (d[static_cast<std::size_t>(v)] > d[static_cast<std::size_t>(best)])
            best = v;
    return best;
}

} // namespace

Vertex StationaryRobber::start(const Graph& g, Vertex cop) {
    if (at_) {
        g.require(*at_);
        return *at_;
    }
    return farthest_from(g, cop);
}

Vertex DistanceGreedyRobber::start(const Graph& g, Vertex cop) { return farthest_from(g, cop); }

Vertex DistanceGreedyRobber::move(const Graph& g, Vertex cop, Vertex robber, const History&) {
    auto d = g.distances_from(cop);
    Vertex best = kNoVertex;
    for (Vertex v : g.neighbors(robber))
        if (best == kNoVertex || d[static_cast<std::size_t>(v)] > d[static_cast<std::size_t>(best)])
            best = v;
    return best;
}

RayRunner::RayRunner(std::vector<Vertex> ray) : ray_(std::move(ray)) {
    if (ray_.empty())
        throw DomainError("ray runner needs at least one vertex");
}

Vertex RayRunner::start(const Graph& g, Vertex) {
    g.require(ray_.front());
    index_ = 0;
    return ray_.front();
}

Vertex RayRunner::move(const Graph& g, Vertex, Vertex robber, const History&) {
    if (index_ + 1 < ray_.size() && g.adjacent(robber, ray_[index_ + 1]))
        ++index_;
    return ray_[index_];
}

int cyclic_distance(int i, int j) {
    int d = ((i - j) % 5 + 5) % 5;
    return std::min(d, 5 - d);
}

HLayout HLayout::from_labels(const Graph& g, std::string_view prefix) {
    auto lookup = [&](const std::string& name) {
        std::string full = std::string(prefix) + name;
        auto v = g.find(full);
        if (!v)
            throw DomainError("graph has no vertex labelled " + full);
        return *v;
    };
    HLayout h;
    for (int i = 0; i < 5; ++i) {
        h.outer[static_cast<std::size_t>(i)] = lookup("a_" + std::to_string(i));
        h.inner[static_cast<std::size_t>(i)] = lookup("b_" + std::to_string(i));
    }
    h.center = lookup("c");
    return h;
}

std::optional<int> HCycleEvader::outer_index(Vertex v) const {
    for (int i = 0; i < 5; ++i)
        if (h_.outer[static_cast<std::size_t>(i)] == v)
            return i;
    return std::nullopt;
}

std::optional<int> HCycleEvader::project(const Graph& g, Vertex cop) const {
    for (int i = 0; i < 5; ++i)
        if (h_.outer[static_cast<std::size_t>(i)] == cop || h_.inner[static_cast<std::size_t>(i)] == cop)
            return i;
    if (cop == h_.center)
        return std::nullopt;
    // Outside this copy: the nearest outer vertex stands in for the cop.
    auto d = g.distances_from(cop);
    int best = 0;
    for (int i = 1; i < 5; ++i)
        if (d[static_cast<std::size_t>(h_.outer[static_cast<std::size_t>(i)])] <
            d[static_cast<std::size_t>(h_.outer[static_cast<std::size_t>(best)])])
            best = i;
    return best;
}

Vertex HCycleEvader::start(const Graph& g, Vertex cop) {
    last_projection_ = project(g, cop);
    int target = last_projection_ ? (*last_projection_ + 2) % 5 : 0;
    return h_.outer[static_cast<std::size_t>(target)];
}

Vertex HCycleEvader::move(const Graph& g, Vertex cop, Vertex robber, const History& history) {
    auto here = outer_index(robber);
    if (!here)
        return robber;
    const int i = *here;
    if (auto p = project(g, cop)) {
        last_projection_ = p;
        int best = i;
        for (int step : {4, 1}) {
            int j = (i + step) % 5;
            if (cyclic_distance(j, *p) > cyclic_distance(best, *p))
                best = j;
        }
        return h_.outer[static_cast<std::size_t>(best)];
    }
    // Cop on the centre.
    if (!last_projection_ || cyclic_distance(i, *last_projection_) == 2)
        return robber;
    if (history.robber.size() >= 2) {
        Vertex back = history.robber[history.robber.size() - 2];
        if (outer_index(back) && g.adjacent(robber, back))
            return back;
    }
    return robber;
}

ScriptedRobber::ScriptedRobber(std::vector<Vertex> script) : script_(std::move(script)) {
    if (script_.empty())
        throw DomainError("script needs a start vertex");
}

Vertex ScriptedRobber::start(const Graph& g, Vertex) {
    if (!g.contains(script_.front()))
        throw ScriptError("scripted start " + std::to_string(script_.front()) + " is not a vertex");
    next_ = 1;
    return script_.front();
}

Vertex ScriptedRobber::move(const Graph& g, Vertex, Vertex robber, const History&) {
    if (next_ >= script_.size())
        return robber;
    Vertex v = script_[next_++];
    if (!g.contains(v) || !g.adjacent(robber, v))
        throw ScriptError("scripted move " + std::to_string(robber) + " -> " + std::to_string(v) + " is illegal");
    return v;
}

} // namespace copwin
