#include "copwin/search.hpp"

#include "copwin/errors.hpp"

#include <algorithm>

namespace copwin {

const char* to_string(SearchVerdict v) noexcept {
    switch (v) {
    case SearchVerdict::robber_wins: return "robber_wins";
    case SearchVerdict::cop_wins: return "cop_wins";
    case SearchVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

std::size_t SearchStateHash::operator()(const SearchState& s) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(s.round);
    auto mix = [&h](std::uint64_t x) {
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    mix(static_cast<std::uint64_t>(s.cop));
    mix(static_cast<std::uint64_t>(s.robber));
    mix(s.memory.visited);
    mix(static_cast<std::uint64_t>(s.memory.since_revisit));
    return static_cast<std::size_t>(h);
}

std::optional<RobberMemory> advance_memory(const RobberMemory& m, Vertex v, int window) {
    if (window <= 0)
        return m;
    const std::uint64_t bit = std::uint64_t{1} << v;
    RobberMemory next = m;
    if (m.visited & bit) {
        next.since_revisit = 0;
    } else {
        next.visited |= bit;
        next.since_revisit = m.since_revisit + 1;
        if (next.since_revisit >= window)
            return std::nullopt;
    }
    return next;
}

namespace {

struct BudgetExceeded {};

class Searcher {
public:
    Searcher(const Graph& g, const Objective& objective, const SearchOptions& options, Witness& witness)
        : g_(g), objective_(objective), options_(options), witness_(witness),
          forbidden_(g.order(), 0), cop_ok_(g.order(), options.cop_allowed.empty() ? 1 : 0) {
        for (Vertex v : objective.forbidden) {
            g.require(v);
            forbidden_[static_cast<std::size_t>(v)] = 1;
        }
        for (Vertex v : options.cop_allowed) {
            g.require(v);
            cop_ok_[static_cast<std::size_t>(v)] = 1;
        }
    }

    std::vector<Vertex> cop_starts() const {
        if (options_.cop)
            return {options_.cop->start()};
        std::vector<Vertex> out;
        for (Vertex v = 0; v < static_cast<Vertex>(g_.order()); ++v)
            if (cop_ok_[static_cast<std::size_t>(v)])
                out.push_back(v);
        return out;
    }

    bool robber_can_start(Vertex c0) {
        for (Vertex r0 = 0; r0 < static_cast<Vertex>(g_.order()); ++r0) {
            if (r0 == c0 || forbidden_[static_cast<std::size_t>(r0)])
                continue;
            auto m = advance_memory({}, r0, objective_.revisit_window);
            if (m && robber_wins({2, c0, r0, *m})) {
                witness_.start[c0] = r0;
                return true;
            }
        }
        return false;
    }

    std::size_t states() const { return memo_.size(); }

private:
    bool robber_wins(const SearchState& s) {
        if (s.round > options_.horizon)
            return true;
        if (auto it = memo_.find(s); it != memo_.end())
            return it->second;
        if (memo_.size() >= options_.budget)
            throw BudgetExceeded{};
        bool value = s.round % 2 == 0 ? after_cop(s) : after_robber(s);
        memo_.emplace(s, value);
        return value;
    }

    bool after_cop(const SearchState& s) {
        auto reply = [&](Vertex next) {
            if (next == s.robber)
                return false;
            return robber_wins({s.round + 1, next, s.robber, s.memory});
        };
        if (options_.cop) {
            Vertex next = options_.cop->move(s.cop, s.robber, s.round);
            if (!g_.contains(next) || !g_.adjacent(s.cop, next))
                throw StrategyError("fixed cop moved illegally during search");
            return reply(next);
        }
        for (Vertex next : g_.neighbors(s.cop))
            if (cop_ok_[static_cast<std::size_t>(next)] && !reply(next))
                return false;
        return true;
    }

    bool after_robber(const SearchState& s) {
        for (Vertex next : g_.neighbors(s.robber)) {
            if (next == s.cop || forbidden_[static_cast<std::size_t>(next)])
                continue;
            auto m = advance_memory(s.memory, next, objective_.revisit_window);
            if (m && robber_wins({s.round + 1, s.cop, next, *m})) {
                witness_.reply[s] = next;
                return true;
            }
        }
        return false;
    }

    const Graph& g_;
    const Objective& objective_;
    const SearchOptions& options_;
    Witness& witness_;
    std::vector<char> forbidden_;
    std::vector<char> cop_ok_;
    std::unordered_map<SearchState, bool, SearchStateHash> memo_;
};

} // namespace

SearchResult adversarial_search(const Graph& g, const Objective& objective, const SearchOptions& options) {
    if (objective.revisit_window > 0 && g.order() > 64)
        throw DomainError("revisit objectives support at most 64 vertices");
    if (options.horizon < 1)
        throw DomainError("horizon must be positive");
    auto witness = std::make_shared<Witness>();
    witness->objective = objective;
    Searcher searcher(g, objective, options, *witness);
    SearchResult result;
    try {
        bool robber = true;
        for (Vertex c0 : searcher.cop_starts()) {
            if (!searcher.robber_can_start(c0)) {
                robber = false;
                break;
            }
        }
        result.verdict = robber ? SearchVerdict::robber_wins : SearchVerdict::cop_wins;
    } catch (const BudgetExceeded&) {
        result.verdict = SearchVerdict::inconclusive;
    }
    result.states = searcher.states();
    if (result.verdict == SearchVerdict::robber_wins)
        result.witness = std::move(witness);
    return result;
}

Vertex WitnessRobber::start(const Graph&, Vertex cop) {
    auto it = witness_->start.find(cop);
    if (it == witness_->start.end())
        throw StrategyError("witness has no start against cop at " + std::to_string(cop));
    memory_ = *advance_memory({}, it->second, witness_->objective.revisit_window);
    return it->second;
}

Vertex WitnessRobber::move(const Graph&, Vertex cop, Vertex robber, const History& history) {
    const Round round = 2 * static_cast<Round>(history.robber.size()) + 1;
    auto it = witness_->reply.find(SearchState{round, cop, robber, memory_});
    if (it == witness_->reply.end())
        throw StrategyError("witness has no reply at round " + std::to_string(round));
    memory_ = *advance_memory(memory_, it->second, witness_->objective.revisit_window);
    return it->second;
}

} // namespace copwin
