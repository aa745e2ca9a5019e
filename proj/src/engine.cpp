#include "copwin/engine.hpp"

#include "copwin/errors.hpp"

#include <algorithm>
#include <map>

namespace copwin {

const char* to_string(Player p) noexcept { return p == Player::cop ? "cop" : "robber"; }

const char* to_string(Outcome o) noexcept {
    switch (o) {
    case Outcome::capture: return "capture";
    case Outcome::horizon: return "horizon";
    case Outcome::fault: return "fault";
    }
    return "?";
}

Round default_horizon(const Graph& g, const RetractionFamily& family) {
    return 10 * static_cast<Round>(g.order()) * std::max(1, family.depth().max());
}

std::vector<int> default_weak_bound(const RetractionFamily& family) {
    const auto& d = family.depth().depth;
    const int fallback = family.depth().max() + 1;
    std::vector<int> bound(d.size());
    for (std::size_t v = 0; v < d.size(); ++v)
        bound[v] = d[v] < 0 ? fallback : d[v] + 1;
    return bound;
}

namespace {

class Annotator {
public:
    Annotator(const CopStrategy& cop, Transcript& t) : t_(t), check_(cop.monotone_stages()) {
        const RetractionFamily* f = cop.family();
        if (f && f->flavor() == Flavor::constructing)
            family_ = f;
    }

    void after_cop_move(Round round, Vertex c, Vertex r) {
        if (!family_)
            return;
        auto k = family_->chain_offset(r, c);
        if (!k) {
            if (check_)
                t_.invariant_violations.push_back("round " + std::to_string(round) +
                                                  ": cop is not on the domination chain of the robber");
            return;
        }
        const auto& order = family_->order();
        Rank stage = *k == 0 ? static_cast<Rank>(order.size())
                             : order.rank(family_->chain(r)[static_cast<std::size_t>(*k - 1)]);
        if (check_ && !t_.stages.empty() && stage < t_.stages.back().stage)
            t_.invariant_violations.push_back("round " + std::to_string(round) + ": stage decreased from " +
                                              std::to_string(t_.stages.back().stage) + " to " +
                                              std::to_string(stage));
        if (check_ && *k > 0) {
            auto [it, fresh] = last_k_.try_emplace(r, *k);
            if (!fresh) {
                if (*k >= it->second)
                    t_.invariant_violations.push_back("round " + std::to_string(round) + ": k at vertex " +
                                                      std::to_string(r) + " did not decrease (" +
                                                      std::to_string(it->second) + " -> " + std::to_string(*k) +
                                                      ")");
                it->second = *k;
            }
        }
        t_.stages.push_back(StageMark{round, r, *k, stage});
    }

private:
    Transcript& t_;
    bool check_;
    const RetractionFamily* family_ = nullptr;
    std::map<Vertex, int> last_k_;
};

} // namespace

Transcript play(const Graph& g, const CopStrategy& cop, RobberPolicy& robber, const PlayOptions& options) {
    Round horizon = options.max_rounds;
    if (horizon == 0)
        horizon = cop.family() ? default_horizon(g, *cop.family()) : 1000;
    if (horizon < 2)
        throw DomainError("max_rounds must be at least 2");

    Transcript t;
    t.visit_counts.assign(g.order(), 0);
    History history;
    std::optional<Annotator> annotator;
    if (options.annotate)
        annotator.emplace(cop, t);

    auto fault = [&](Round round, std::string why) {
        t.outcome = Outcome::fault;
        t.last_round = round;
        t.fault = std::move(why);
        return t;
    };
    auto record = [&](Round round, Player p, Vertex v) {
        t.moves.push_back(Move{round, p, v});
        Vertex c = p == Player::cop ? v : t.cop.back();
        Vertex r = p == Player::robber ? v : t.robber.back();
        if (p == Player::robber && v != t.robber.back())
            ++t.visit_counts[static_cast<std::size_t>(v)];
        t.cop.push_back(c);
        t.robber.push_back(r);
        if (p == Player::cop)
            history.cop.push_back(c);
        else
            history.robber.push_back(r);
        return c == r;
    };

    robber.reset();
    Vertex c0 = cop.start();
    if (!g.contains(c0))
        return fault(0, "cop start " + std::to_string(c0) + " is not a vertex");
    t.moves.push_back(Move{0, Player::cop, c0});
    t.cop.push_back(c0);
    t.robber.push_back(kNoVertex);
    history.cop.push_back(c0);

    Vertex r0 = options.robber_start ? *options.robber_start : robber.start(g, c0);
    if (!g.contains(r0))
        return fault(1, "robber start " + std::to_string(r0) + " is not a vertex");
    if (record(1, Player::robber, r0)) {
        t.outcome = Outcome::capture;
        t.last_round = 1;
        return t;
    }

    for (Round round = 2; round <= horizon; ++round) {
        const Vertex c = t.cop.back();
        const Vertex r = t.robber.back();
        const bool cop_turn = round % 2 == 0;
        Vertex next;
        try {
            next = cop_turn ? cop.move(c, r, round) : robber.move(g, c, r, history);
        } catch (const ScriptError&) {
            throw;
        } catch (const StrategyError& e) {
            return fault(round, std::string(cop_turn ? "cop " : "robber ") + e.what());
        } catch (const NonTotalRetraction& e) {
            return fault(round, std::string(cop_turn ? "cop " : "robber ") + e.what());
        }
        const Vertex from = cop_turn ? c : r;
        if (!g.contains(next) || !g.adjacent(from, next))
            return fault(round, std::string(cop_turn ? "cop" : "robber") + " moved illegally from " +
                                    std::to_string(from) + " to " + std::to_string(next));
        bool caught = record(round, cop_turn ? Player::cop : Player::robber, next);
        if (cop_turn && annotator)
            annotator->after_cop_move(round, next, r);
        if (caught) {
            t.outcome = Outcome::capture;
            t.last_round = round;
            return t;
        }
    }
    t.outcome = Outcome::horizon;
    t.last_round = horizon;
    return t;
}

bool evaluate_classic(const Transcript& t) {
    if (t.outcome == Outcome::fault)
        throw EvaluationError("transcript aborted: " + t.fault);
    return t.captured();
}

WeakVerdict evaluate_weak(const Transcript& t, std::span<const int> bound) {
    if (t.outcome == Outcome::fault)
        throw EvaluationError("transcript aborted: " + t.fault);
    if (bound.size() != t.visit_counts.size())
        throw DomainError("visit bound must cover every vertex");
    if (t.captured())
        return {};
    for (std::size_t v = 0; v < bound.size(); ++v)
        if (t.visit_counts[v] > bound[v])
            return WeakVerdict{false, static_cast<Vertex>(v), t.visit_counts[v], bound[v]};
    return {};
}

WeakVerdict evaluate_weak(const Transcript& t, int uniform_bound) {
    std::vector<int> bound(t.visit_counts.size(), uniform_bound);
    return evaluate_weak(t, bound);
}

CweakVerdict evaluate_cweak(const Transcript& t, int tail) {
    if (t.outcome == Outcome::fault)
        throw EvaluationError("transcript aborted: " + t.fault);
    CweakVerdict out;
    std::vector<char> seen(t.visit_counts.size(), 0);
    int robber_moves = 0;
    for (const Move& m : t.moves) {
        if (m.player != Player::robber)
            continue;
        if (m.round > 1)
            ++robber_moves;
        auto& s = seen[static_cast<std::size_t>(m.vertex)];
        if (s) {
            out.fresh_from = m.round;
            out.fresh_moves = 0;
        } else if (m.round > 1) {
            ++out.fresh_moves;
        }
        s = 1;
    }
    if (t.captured())
        return out;
    const int need = tail >= 0 ? tail : (robber_moves + 1) / 2;
    out.ok = out.fresh_moves >= need;
    return out;
}

ShadowReport shadow_replay(const Graph& g, const Transcript& t, std::span<const Vertex> f) {
    if (f.size() != g.order())
        throw DomainError("retraction must be a full vertex map");
    ShadowReport rep;
    if (t.captured())
        rep.capture = t.last_round;
    auto image = [&](Vertex v) { return f[static_cast<std::size_t>(v)]; };
    for (std::size_t round = 0; round < t.cop.size(); ++round) {
        Vertex sc = image(t.cop[round]);
        if (round > 0 && !g.adjacent(image(t.cop[round - 1]), sc) && rep.legal) {
            rep.legal = false;
            rep.message = "shadow move at round " + std::to_string(round) + " is not an edge";
        }
        Vertex r = t.robber[round];
        if (r == kNoVertex)
            continue;
        if (image(r) != r && rep.robber_confined) {
            rep.robber_confined = false;
            if (rep.message.empty())
                rep.message = "robber leaves the retract at round " + std::to_string(round);
        }
        if (rep.shadow_capture < 0 && sc == r)
            rep.shadow_capture = static_cast<Round>(round);
    }
    return rep;
}

} // namespace copwin
