#pragma once

#include "copwin/graph.hpp"
#include "copwin/order.hpp"
#include "copwin/strategies.hpp"

#include <cstdint>
#include <vector>

namespace copwin {

/// Horizon-bounded timing of a fixed (possibly time-dependent) cop strategy
/// against every robber behaviour.
///
/// The robber robs v at an odd round t when he stands on v after round t and
/// the cop's move at round t+1 does not capture him. All arrays are indexed
/// by vertex; -1 means "not within the horizon".
struct TimingProfile {
    Round horizon = 0;
    std::vector<Round> t_r_lower; // latest round at which v can be robbed
    std::vector<char> t_r_open;   // robbing still possible at the last checkable round
    std::vector<Round> t_c;       // earliest round the cop can stand on v
    std::vector<Round> t_c_max;   // latest first arrival over robber behaviours (diagnostic)

    /// No vertex can still be robbed at the end of the horizon.
    bool total() const;
};

/// Forward exploration of every reachable (cop, robber) configuration.
TimingProfile estimate_timing(const Graph& g, const CopStrategy& cop, Round horizon);

/// Sorts vertices by t_r_lower (ties by id) and attaches lowest-id
/// dominators. If id tie-breaking fails to verify, ties are broken by t_c
/// instead. Throws DomainError when the profile is not total and
/// TheoremContradiction when neither order verifies.
Order order_from_protective(const Graph& g, const TimingProfile& profile);

struct LateRobberyProbe {
    std::size_t trajectories = 0;
    std::size_t checks = 0;   // (round, vertex) pairs where the robber was forced onto v
    std::size_t captures = 0; // of those, caught by the cop's next move
};

/// Random robber trajectories against `cop`. At every odd round t of every
/// trajectory and for every neighbour v of the robber with t >= 2*rank(v)+1,
/// the robber is forced onto v and the cop's reply at t+1 is checked for a
/// capture.
LateRobberyProbe probe_late_robbery(const Graph& g, const CopStrategy& cop, const Order& order,
                                    std::size_t trajectories, Round horizon, std::uint64_t seed);

} // namespace copwin
