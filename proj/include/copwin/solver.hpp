#pragma once

#include "copwin/graph.hpp"
#include "copwin/strategies.hpp"

#include <memory>
#include <vector>

namespace copwin {

enum class Side { cop_to_move = 0, robber_to_move = 1 };

/// Exact solution of the one-cop game on a finite graph by retrograde
/// analysis over (cop, robber, side to move).
///
/// steps(c, r, side) is the number of further moves until capture under
/// optimal play (cop minimising, robber maximising); -1 where the robber
/// escapes forever. The table keeps its own copy of the graph.
class GameStateTable {
public:
    explicit GameStateTable(Graph g);

    const Graph& graph() const noexcept { return g_; }

    bool cop_wins(Vertex c, Vertex r, Side side) const { return steps(c, r, side) >= 0; }
    int steps(Vertex c, Vertex r, Side side) const;

    /// Cop commits first, the robber answers: exists c0, for all r0, cop-to-move
    /// state (c0, r0) is winning.
    bool cop_win() const noexcept { return cop_start_ != kNoVertex && start_steps_ >= 0; }

    /// Best start for the cop: a winning one with the fewest steps against
    /// the worst robber start (lowest id on ties); 0 when the graph is not cop-win.
    Vertex cop_start() const noexcept { return cop_start_ == kNoVertex ? 0 : cop_start_; }

    /// Robber's answer to a cop start: an escaping vertex if any, else the
    /// one delaying capture longest.
    Vertex robber_start(Vertex c0) const;

    /// Winning move with the fewest remaining steps, or, from a losing state,
    /// the neighbour closest to the robber.
    Vertex cop_move(Vertex c, Vertex r) const;

    /// Escaping move if any, else the move delaying capture longest; never
    /// steps onto the cop unless forced.
    Vertex robber_move(Vertex c, Vertex r) const;

private:
    std::size_t index(Vertex c, Vertex r, Side side) const;

    Graph g_;
    std::size_t n_;
    std::vector<int> steps_;
    DistanceMatrix dist_;
    Vertex cop_start_ = kNoVertex;
    int start_steps_ = -1;
};

GameStateTable solve_game(const Graph& g);

/// Verdict only.
bool decide_cop_win(const Graph& g);

class OptimalCop final : public CopStrategy {
public:
    explicit OptimalCop(std::shared_ptr<const GameStateTable> table) : table_(std::move(table)) {}
    std::string_view name() const override { return "optimal"; }
    Vertex start() const override { return table_->cop_start(); }
    Vertex move(Vertex c, Vertex r, Round) const override { return table_->cop_move(c, r); }

private:
    std::shared_ptr<const GameStateTable> table_;
};

/// Plays the table's optimal robber moves. The table must be built on the
/// graph the game is played on.
class AdversarialRobber final : public RobberPolicy {
public:
    explicit AdversarialRobber(std::shared_ptr<const GameStateTable> table) : table_(std::move(table)) {}
    std::string_view name() const override { return "adversarial"; }
    Vertex start(const Graph&, Vertex cop) override { return table_->robber_start(cop); }
    Vertex move(const Graph&, Vertex cop, Vertex robber, const History&) override {
        return table_->robber_move(cop, robber);
    }

private:
    std::shared_ptr<const GameStateTable> table_;
};

} // namespace copwin
