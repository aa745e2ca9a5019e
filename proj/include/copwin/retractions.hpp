#pragma once

#include "copwin/graph.hpp"
#include "copwin/order.hpp"
#include "copwin/orders.hpp"

#include <optional>
#include <span>
#include <vector>

namespace copwin {

/// The family of maps rho_nu obtained by iterating the domination map until
/// the rank condition first holds: rank < nu for constructing orders, rank >=
/// nu for dismantling orders.
///
/// All values are computed once at construction (iteration bounded by the
/// order size) and stored, so a family is immutable and may be shared between
/// threads. Valid ranks: 1..size() when constructing (rho_size is the
/// identity), 0..size()-1 when dismantling.
class RetractionFamily {
public:
    explicit RetractionFamily(Order order);

    Flavor flavor() const noexcept { return order_.flavor(); }
    const Order& order() const noexcept { return order_; }
    const DepthTable& depth() const noexcept { return depth_; }
    std::size_t size() const noexcept { return order_.size(); }

    Rank min_rank() const noexcept { return flavor() == Flavor::constructing ? 1 : 0; }
    Rank max_rank() const noexcept {
        return flavor() == Flavor::constructing ? static_cast<Rank>(size()) : static_cast<Rank>(size()) - 1;
    }

    /// Throws DomainError for ranks outside [min_rank, max_rank] (constructing
    /// ranks above size() are clamped to the identity) and NonTotalRetraction
    /// when the chain of mu never meets the condition.
    Vertex rho(Rank nu, Vertex mu) const;
    std::optional<Vertex> try_rho(Rank nu, Vertex mu) const;

    /// k(nu, mu): number of delta steps taken by rho(nu, mu).
    int steps(Rank nu, Vertex mu) const;

    /// mu, delta(mu), delta^2(mu), ... up to the end of the chain.
    std::span<const Vertex> chain(Vertex mu) const;

    /// k with delta^k(from) == to, if `to` lies on the chain of `from`.
    std::optional<int> chain_offset(Vertex from, Vertex to) const;

    bool total_at(Rank nu) const;

    /// rho_nu as a full vertex map; requires total_at(nu).
    std::vector<Vertex> map(Rank nu) const;

    /// The vertices rho_nu fixes: ranks < nu or ranks >= nu.
    std::vector<Vertex> retract(Rank nu) const;

private:
    Rank clamp(Rank nu) const;

    Order order_;
    DepthTable depth_;
    std::vector<std::vector<Vertex>> chains_;
    std::vector<Vertex> table_; // (nu * size + mu), kNoVertex where not total
    std::vector<char> total_;
};

/// f is a retraction of g onto `target`: image inside target, target fixed
/// pointwise, every edge mapped to an edge or a single vertex.
CheckResult check_retraction(const Graph& g, std::span<const Vertex> f, std::span<const Vertex> target);

/// For every edge mu-eta (loops included, both orientations) and every nu in
/// [first, last]: rho_{nu+1}(mu) is adjacent or equal to rho_nu(eta). Throws
/// NonTotalRetraction naming the first (nu, mu) where either map is undefined.
CheckResult check_shifted_edge_property(const RetractionFamily& family, const Graph& g, Rank first, Rank last);

/// The same over every nu such that rho_nu and rho_{nu+1} are both total.
CheckResult check_shifted_edge_property(const RetractionFamily& family, const Graph& g);

} // namespace copwin
