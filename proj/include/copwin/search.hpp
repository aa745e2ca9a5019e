#pragma once

#include "copwin/graph.hpp"
#include "copwin/strategies.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

namespace copwin {

/// What the robber must achieve through the horizon. Survival (no capture)
/// is always required.
struct Objective {
    /// Vertices the robber may never occupy.
    std::vector<Vertex> forbidden;
    /// When positive, every run of this many consecutive robber moves must
    /// contain a revisit (staying put counts). Needs a graph of at most 64
    /// vertices.
    int revisit_window = 0;

    static Objective survive() { return {}; }
    static Objective survive_and_avoid(std::vector<Vertex> forbidden) { return {std::move(forbidden), 0}; }
    static Objective survive_with_revisit(int window) { return {{}, window}; }
};

struct SearchOptions {
    Round horizon = 50;
    /// Cop universe: every legal cop behaviour (optionally confined to
    /// `cop_allowed`) when `cop` is null, otherwise that fixed strategy.
    const CopStrategy* cop = nullptr;
    std::vector<Vertex> cop_allowed; // empty: all vertices
    std::size_t budget = 20'000'000; // distinct states before giving up
};

/// Robber-side memory carried through the search.
struct RobberMemory {
    std::uint64_t visited = 0;
    std::int32_t since_revisit = 0;

    bool operator==(const RobberMemory&) const = default;
};

struct SearchState {
    Round round; // next round to be played
    Vertex cop;
    Vertex robber;
    RobberMemory memory;

    bool operator==(const SearchState&) const = default;
};

struct SearchStateHash {
    std::size_t operator()(const SearchState& s) const noexcept;
};

/// The robber's winning replies found by the search.
struct Witness {
    Objective objective;
    std::unordered_map<Vertex, Vertex> start;                  // cop start -> robber start
    std::unordered_map<SearchState, Vertex, SearchStateHash> reply; // state before a robber round -> move
};

enum class SearchVerdict { robber_wins, cop_wins, inconclusive };

const char* to_string(SearchVerdict v) noexcept;

struct SearchResult {
    SearchVerdict verdict = SearchVerdict::inconclusive;
    std::size_t states = 0;
    std::shared_ptr<const Witness> witness; // set when the robber wins
};

/// Exhaustive depth-first game-tree search over (round, cop, robber, memory)
/// for rounds 0..horizon. The robber wins when he meets the objective against
/// every cop behaviour in the universe; exceeding the budget yields
/// `inconclusive`, never `cop_wins`.
SearchResult adversarial_search(const Graph& g, const Objective& objective, const SearchOptions& options);

/// Replays a witness. Throws StrategyError on a state the witness never saw.
class WitnessRobber final : public RobberPolicy {
public:
    explicit WitnessRobber(std::shared_ptr<const Witness> witness) : witness_(std::move(witness)) {}
    std::string_view name() const override { return "witness"; }
    void reset() override { memory_ = {}; }
    Vertex start(const Graph& g, Vertex cop) override;
    Vertex move(const Graph& g, Vertex cop, Vertex robber, const History& history) override;

private:
    std::shared_ptr<const Witness> witness_;
    RobberMemory memory_;
};

/// Memory after the robber arrives at `v`; nullopt when the revisit window
/// is violated.
std::optional<RobberMemory> advance_memory(const RobberMemory& m, Vertex v, int window);

} // namespace copwin
