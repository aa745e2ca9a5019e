#pragma once

#include "copwin/graph.hpp"
#include "copwin/retractions.hpp"
#include "copwin/strategies.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace copwin {

enum class Player { cop, robber };
enum class Outcome { capture, horizon, fault };

const char* to_string(Player p) noexcept;
const char* to_string(Outcome o) noexcept;

struct Move {
    Round round;
    Player player;
    Vertex vertex;

    bool operator==(const Move&) const = default;
};

/// Cop position relative to the retraction family after one of her moves:
/// c = delta^k(r) and `stage` is the largest nu with rho_nu(r) = c.
struct StageMark {
    Round round;
    Vertex robber;
    int k;
    Rank stage;

    bool operator==(const StageMark&) const = default;
};

struct Transcript {
    std::vector<Move> moves;
    Outcome outcome = Outcome::horizon;
    Round last_round = -1;    // capture round, last round played, or faulting round
    std::string fault;        // offender and reason when outcome == fault

    /// Positions after each round, indexed by round. robber[0] is kNoVertex.
    std::vector<Vertex> cop;
    std::vector<Vertex> robber;

    /// Robber arrivals per vertex: the placement plus every move that changes
    /// vertex. Waiting in place does not add a visit.
    std::vector<int> visit_counts;

    std::vector<StageMark> stages;
    std::vector<std::string> invariant_violations;

    bool captured() const noexcept { return outcome == Outcome::capture; }
};

struct PlayOptions {
    Round max_rounds = 0; // 0: default_horizon of the cop's family, else 1000
    std::optional<Vertex> robber_start;
    bool annotate = true;
};

/// Plays rounds 0..max_rounds: round 0 places the cop, round 1 the robber,
/// then even rounds move the cop and odd rounds the robber. Capture is tested
/// after every move. A strategy returning a non-adjacent vertex, or raising
/// StrategyError, ends the game with Outcome::fault; ScriptError propagates.
///
/// With `annotate` and a constructing family on the cop, every cop move from
/// round 2 on gets a StageMark; for cops with monotone_stages() a stage that
/// decreases, or a per-vertex k that fails to decrease, is recorded in
/// invariant_violations.
Transcript play(const Graph& g, const CopStrategy& cop, RobberPolicy& robber, const PlayOptions& options = {});

/// 10 * |V| * max(1, max depth).
Round default_horizon(const Graph& g, const RetractionFamily& family);

/// depth(v) + 1 per vertex; vertices without a finite depth get max depth + 1.
std::vector<int> default_weak_bound(const RetractionFamily& family);

/// Throws EvaluationError on a faulted transcript.
bool evaluate_classic(const Transcript& t);

struct WeakVerdict {
    bool ok = true;
    Vertex offender = kNoVertex;
    int visits = 0;
    int bound = 0;
};

/// Capture, or every visit count within its bound. Reports the lowest-id
/// vertex over its bound.
WeakVerdict evaluate_weak(const Transcript& t, std::span<const int> bound);
WeakVerdict evaluate_weak(const Transcript& t, int uniform_bound);

struct CweakVerdict {
    bool ok = true;
    /// Round after which every robber move enters a fresh vertex: the last
    /// revisiting move, or 1 when every arrival was fresh.
    Round fresh_from = 1;
    int fresh_moves = 0; // robber moves after fresh_from
};

/// Finite-horizon reading of "from some round on, every robber move enters a
/// never-visited vertex": true on capture, else true iff the fresh suffix
/// holds at least `tail` robber moves (default: half of them, rounded up).
/// Staying put counts as a revisit.
CweakVerdict evaluate_cweak(const Transcript& t, int tail = -1);

struct ShadowReport {
    bool legal = true;            // f(cop) moves along edges
    bool robber_confined = true;  // robber never leaves the fixed set of f
    Round capture = -1;           // capture round of the original game
    Round shadow_capture = -1;    // first round with f(cop) == robber
    std::string message;
};

/// Replays a transcript through a retraction f: G -> H (a full vertex map).
ShadowReport shadow_replay(const Graph& g, const Transcript& t, std::span<const Vertex> f);

} // namespace copwin
