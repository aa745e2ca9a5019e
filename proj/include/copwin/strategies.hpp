#pragma once

#include "copwin/graph.hpp"
#include "copwin/order.hpp"
#include "copwin/retractions.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace copwin {

using Round = int;

// ---------------------------------------------------------------------------
// Cop move rules

/// s*: walk r, delta(r), delta^2(r), ... and return the first vertex adjacent
/// to c (r itself when c ~ r). Throws StrategyError if the chain ends first.
Vertex s_star_move(const Graph& g, const RetractionFamily& family, Vertex c, Vertex r);

/// The strategy s defined by recursion over the prefix graphs G_{<nu}:
///   s_nu(c, r) = nu-1               if r = nu-1 and c ~ r
///              = s_{nu-1}(c, delta(r)) if r = nu-1 and not c ~ r
///              = s_{nu-1}(c, r)      otherwise.
/// Throws StrategyError when the recursion runs out of ranks.
Vertex recursive_s_move(const Graph& g, const Order& order, Vertex c, Vertex r);

/// Time-dependent protective rule: at round 2nu the cop moves to rho_{nu+1}(r).
Vertex protective_move(const RetractionFamily& family, Vertex r, Round round);

/// Dismantling rule: delta^k(r) for the least k with c ~ delta^k(r); delta(c)
/// when no such k exists. Throws StrategyError if c has no dominator then.
Vertex dismantable_move(const Graph& g, const RetractionFamily& family, Vertex c, Vertex r);

/// A deterministic cop. `move` must be a pure function of its arguments so
/// searches can query it at arbitrary states.
class CopStrategy {
public:
    virtual ~CopStrategy() = default;
    virtual std::string_view name() const = 0;
    virtual Vertex start() const = 0;
    virtual Vertex move(Vertex cop, Vertex robber, Round round) const = 0;
    virtual bool time_dependent() const { return false; }
    /// Constructing family whose rho maps describe the cop's position, if any.
    virtual const RetractionFamily* family() const { return nullptr; }
    /// True when the stage/visit-decay invariants of s* apply.
    virtual bool monotone_stages() const { return false; }
};

class SStarCop final : public CopStrategy {
public:
    SStarCop(const Graph& g, std::shared_ptr<const RetractionFamily> family);
    std::string_view name() const override { return "s_star"; }
    Vertex start() const override;
    Vertex move(Vertex c, Vertex r, Round) const override;
    const RetractionFamily* family() const override { return family_.get(); }
    bool monotone_stages() const override { return true; }

private:
    const Graph* g_;
    std::shared_ptr<const RetractionFamily> family_;
};

/// s with results memoised per (c, r). Not thread-safe; one instance per
/// game worker.
class RecursiveSCop final : public CopStrategy {
public:
    RecursiveSCop(const Graph& g, std::shared_ptr<const RetractionFamily> family);
    std::string_view name() const override { return "recursive"; }
    Vertex start() const override;
    Vertex move(Vertex c, Vertex r, Round) const override;
    const RetractionFamily* family() const override { return family_.get(); }
    bool monotone_stages() const override { return true; }

private:
    const Graph* g_;
    std::shared_ptr<const RetractionFamily> family_;
    mutable std::unordered_map<std::int64_t, Vertex> memo_;
};

class ProtectiveCop final : public CopStrategy {
public:
    explicit ProtectiveCop(std::shared_ptr<const RetractionFamily> family);
    std::string_view name() const override { return "protective"; }
    Vertex start() const override;
    Vertex move(Vertex c, Vertex r, Round round) const override;
    bool time_dependent() const override { return true; }
    const RetractionFamily* family() const override { return family_.get(); }

private:
    std::shared_ptr<const RetractionFamily> family_;
};

class DismantableCop final : public CopStrategy {
public:
    DismantableCop(const Graph& g, std::shared_ptr<const RetractionFamily> family);
    std::string_view name() const override { return "dismantable"; }
    Vertex start() const override;
    Vertex move(Vertex c, Vertex r, Round) const override;

private:
    const Graph* g_;
    std::shared_ptr<const RetractionFamily> family_;
};

// ---------------------------------------------------------------------------
// Robber policies

/// Positions so far: cop[i] after the cop's i-th move (cop[0] = start),
/// robber[i] likewise.
struct History {
    std::vector<Vertex> cop;
    std::vector<Vertex> robber;
};

class RobberPolicy {
public:
    virtual ~RobberPolicy() = default;
    virtual std::string_view name() const = 0;
    /// Called once before every game.
    virtual void reset() {}
    virtual Vertex start(const Graph& g, Vertex cop) = 0;
    virtual Vertex move(const Graph& g, Vertex cop, Vertex robber, const History& history) = 0;
};

/// Stays put. Starts at `at`, or at the vertex farthest from the cop.
class StationaryRobber final : public RobberPolicy {
public:
    explicit StationaryRobber(std::optional<Vertex> at = std::nullopt) : at_(at) {}
    std::string_view name() const override { return "stationary"; }
    Vertex start(const Graph& g, Vertex cop) override;
    Vertex move(const Graph&, Vertex, Vertex robber, const History&) override { return robber; }

private:
    std::optional<Vertex> at_;
};

/// Moves to the closed neighbour farthest from the cop; ties to the lowest id.
class DistanceGreedyRobber final : public RobberPolicy {
public:
    std::string_view name() const override { return "greedy"; }
    Vertex start(const Graph& g, Vertex cop) override;
    Vertex move(const Graph& g, Vertex cop, Vertex robber, const History&) override;
};

/// Walks a fixed path one step per turn, staying at its end.
class RayRunner final : public RobberPolicy {
public:
    explicit RayRunner(std::vector<Vertex> ray);
    std::string_view name() const override { return "ray"; }
    void reset() override { index_ = 0; }
    Vertex start(const Graph& g, Vertex cop) override;
    Vertex move(const Graph& g, Vertex cop, Vertex robber, const History&) override;

private:
    std::vector<Vertex> ray_;
    std::size_t index_ = 0;
};

/// Vertex ids of one copy of the H block.
struct HLayout {
    std::array<Vertex, 5> outer{}; // a_0..a_4
    std::array<Vertex, 5> inner{}; // b_0..b_4
    Vertex center = kNoVertex;

    /// Reads a layout from labels "a_0".."a_4", "b_0".."b_4", "c" (with an
    /// optional common prefix such as "03:" for a copy inside a larger graph).
    static HLayout from_labels(const Graph& g, std::string_view prefix = "");
};

/// Keeps to the outer 5-cycle of one H copy, maximising the cyclic distance
/// to the cop's projection on it. While the cop sits on the centre it stays
/// if already at maximal distance from her last projection, else steps back.
class HCycleEvader final : public RobberPolicy {
public:
    explicit HCycleEvader(HLayout layout) : h_(layout) {}
    std::string_view name() const override { return "h_evader"; }
    void reset() override { last_projection_.reset(); }
    Vertex start(const Graph& g, Vertex cop) override;
    Vertex move(const Graph& g, Vertex cop, Vertex robber, const History& history) override;

private:
    std::optional<int> outer_index(Vertex v) const;
    /// Outer index the cop covers; nullopt while she is on the centre.
    std::optional<int> project(const Graph& g, Vertex cop) const;

    HLayout h_;
    std::optional<int> last_projection_;
};

/// Plays a fixed list: the first entry is the start, the rest are moves; once
/// exhausted it stays. An illegal scripted move throws ScriptError.
class ScriptedRobber final : public RobberPolicy {
public:
    explicit ScriptedRobber(std::vector<Vertex> script);
    std::string_view name() const override { return "script"; }
    void reset() override { next_ = 1; }
    Vertex start(const Graph& g, Vertex cop) override;
    Vertex move(const Graph& g, Vertex cop, Vertex robber, const History&) override;

private:
    std::vector<Vertex> script_;
    std::size_t next_ = 1;
};

/// Cyclic distance on the 5-cycle.
int cyclic_distance(int i, int j);

} // namespace copwin
