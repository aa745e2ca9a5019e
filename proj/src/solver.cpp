#include "copwin/solver.hpp"

#include "copwin/errors.hpp"

#include <deque>

namespace copwin {

GameStateTable::GameStateTable(Graph g) : g_(std::move(g)), n_(g_.order()), dist_(g_) {
    if (n_ == 0)
        throw DomainError("empty graph");
    steps_.assign(2 * n_ * n_, -1);

    // Robber-to-move states wait for all of the robber's options to be lost.
    std::vector<int> pending(2 * n_ * n_, 0);
    for (Vertex c = 0; c < static_cast<Vertex>(n_); ++c)
        for (Vertex r = 0; r < static_cast<Vertex>(n_); ++r)
            pending[index(c, r, Side::robber_to_move)] = static_cast<int>(g_.degree(r)) + 1;

    struct State {
        Vertex c, r;
        Side side;
    };
    std::deque<State> queue;
    for (Vertex v = 0; v < static_cast<Vertex>(n_); ++v)
        for (Side s : {Side::cop_to_move, Side::robber_to_move}) {
            steps_[index(v, v, s)] = 0;
            queue.push_back({v, v, s});
        }

    while (!queue.empty()) {
        auto [c, r, side] = queue.front();
        queue.pop_front();
        const int here = steps_[index(c, r, side)];
        if (side == Side::robber_to_move) {
            // Predecessors: the cop moved into c from a neighbour.
            for (Vertex pc : g_.neighbors(c)) {
                std::size_t i = index(pc, r, Side::cop_to_move);
                if (steps_[i] < 0) {
                    steps_[i] = here + 1;
                    queue.push_back({pc, r, Side::cop_to_move});
                }
            }
        } else {
            for (Vertex pr : g_.neighbors(r)) {
                std::size_t i = index(c, pr, Side::robber_to_move);
                if (steps_[i] >= 0)
                    continue;
                if (--pending[i] == 0) {
                    steps_[i] = here + 1;
                    queue.push_back({c, pr, Side::robber_to_move});
                }
            }
        }
    }

    for (Vertex c0 = 0; c0 < static_cast<Vertex>(n_); ++c0) {
        int worst = 0;
        for (Vertex r0 = 0; r0 < static_cast<Vertex>(n_) && worst >= 0; ++r0) {
            int s = steps(c0, r0, Side::cop_to_move);
            worst = s < 0 ? -1 : std::max(worst, s);
        }
        if (worst >= 0 && (cop_start_ == kNoVertex || worst < start_steps_)) {
            cop_start_ = c0;
            start_steps_ = worst;
        }
    }
}

std::size_t GameStateTable::index(Vertex c, Vertex r, Side side) const {
    return (static_cast<std::size_t>(side) * n_ + static_cast<std::size_t>(c)) * n_ + static_cast<std::size_t>(r);
}

int GameStateTable::steps(Vertex c, Vertex r, Side side) const {
    g_.require(c);
    g_.require(r);
    return steps_[index(c, r, side)];
}

Vertex GameStateTable::robber_start(Vertex c0) const {
    g_.require(c0);
    Vertex best = kNoVertex;
    int best_steps = 0;
    for (Vertex r0 = 0; r0 < static_cast<Vertex>(n_); ++r0) {
        int s = steps(c0, r0, Side::cop_to_move);
        if (s < 0)
            return r0;
        if (best == kNoVertex || s > best_steps) {
            best = r0;
            best_steps = s;
        }
    }
    return best;
}

Vertex GameStateTable::cop_move(Vertex c, Vertex r) const {
    Vertex best = kNoVertex;
    int best_steps = 0;
    for (Vertex v : g_.neighbors(c)) {
        int s = steps(v, r, Side::robber_to_move);
        if (s >= 0 && (best == kNoVertex || s < best_steps)) {
            best = v;
            best_steps = s;
        }
    }
    if (best != kNoVertex)
        return best;
    for (Vertex v : g_.neighbors(c))
        if (best == kNoVertex || dist_(v, r) < dist_(best, r))
            best = v;
    return best;
}

Vertex GameStateTable::robber_move(Vertex c, Vertex r) const {
    Vertex best = kNoVertex;
    int best_steps = -2;
    for (Vertex v : g_.neighbors(r)) {
        int s = v == c ? 0 : steps(c, v, Side::cop_to_move);
        if (s < 0)
            return v;
        if (s > best_steps) {
            best = v;
            best_steps = s;
        }
    }
    return best;
}

GameStateTable solve_game(const Graph& g) { return GameStateTable(g); }

bool decide_cop_win(const Graph& g) { return GameStateTable(g).cop_win(); }

} // namespace copwin
