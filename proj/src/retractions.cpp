#include "copwin/retractions.hpp"

#include "copwin/errors.hpp"

#include <algorithm>

namespace copwin {

RetractionFamily::RetractionFamily(Order order) : order_(std::move(order)), depth_(depth_table(order_)) {
    const std::size_t n = order_.size();
    chains_.resize(n);
    for (Vertex mu = 0; mu < static_cast<Vertex>(n); ++mu) {
        auto& chain = chains_[static_cast<std::size_t>(mu)];
        for (Vertex v = mu; v != kNoVertex; v = order_.delta(v)) {
            if (chain.size() > n)
                throw InvalidOrder("domination chain of " + std::to_string(mu) + " does not terminate");
            chain.push_back(v);
        }
    }

    const bool constructing = flavor() == Flavor::constructing;
    table_.assign((n + 1) * n, kNoVertex);
    total_.assign(n + 1, 1);
    for (Rank nu = 0; nu <= static_cast<Rank>(n); ++nu) {
        for (Vertex mu = 0; mu < static_cast<Vertex>(n); ++mu) {
            Vertex hit = kNoVertex;
            for (Vertex v : chains_[static_cast<std::size_t>(mu)]) {
                Rank r = order_.rank(v);
                if (constructing ? r < nu : r >= nu) {
                    hit = v;
                    break;
                }
            }
            table_[static_cast<std::size_t>(nu) * n + static_cast<std::size_t>(mu)] = hit;
            if (hit == kNoVertex)
                total_[static_cast<std::size_t>(nu)] = 0;
        }
    }
}

Rank RetractionFamily::clamp(Rank nu) const {
    if (flavor() == Flavor::constructing && nu > static_cast<Rank>(size()))
        return static_cast<Rank>(size());
    if (nu < min_rank() || nu > max_rank())
        throw DomainError("rank " + std::to_string(nu) + " outside [" + std::to_string(min_rank()) + ", " +
                          std::to_string(max_rank()) + "]");
    return nu;
}

std::optional<Vertex> RetractionFamily::try_rho(Rank nu, Vertex mu) const {
    nu = clamp(nu);
    if (mu < 0 || static_cast<std::size_t>(mu) >= size())
        throw DomainError("vertex not in order: " + std::to_string(mu));
    Vertex v = table_[static_cast<std::size_t>(nu) * size() + static_cast<std::size_t>(mu)];
    if (v == kNoVertex)
        return std::nullopt;
    return v;
}

Vertex RetractionFamily::rho(Rank nu, Vertex mu) const {
    auto v = try_rho(nu, mu);
    if (!v)
        throw NonTotalRetraction(nu, mu);
    return *v;
}

int RetractionFamily::steps(Rank nu, Vertex mu) const {
    Vertex target = rho(nu, mu);
    return *chain_offset(mu, target);
}

std::span<const Vertex> RetractionFamily::chain(Vertex mu) const {
    if (mu < 0 || static_cast<std::size_t>(mu) >= size())
        throw DomainError("vertex not in order: " + std::to_string(mu));
    return chains_[static_cast<std::size_t>(mu)];
}

std::optional<int> RetractionFamily::chain_offset(Vertex from, Vertex to) const {
    auto c = chain(from);
    auto it = std::find(c.begin(), c.end(), to);
    if (it == c.end())
        return std::nullopt;
    return static_cast<int>(it - c.begin());
}

bool RetractionFamily::total_at(Rank nu) const {
    return total_[static_cast<std::size_t>(clamp(nu))] != 0;
}

std::vector<Vertex> RetractionFamily::map(Rank nu) const {
    std::vector<Vertex> f(size());
    for (Vertex mu = 0; mu < static_cast<Vertex>(size()); ++mu)
        f[static_cast<std::size_t>(mu)] = rho(nu, mu);
    return f;
}

std::vector<Vertex> RetractionFamily::retract(Rank nu) const {
    nu = clamp(nu);
    std::vector<Vertex> out;
    for (Rank r = 0; r < static_cast<Rank>(size()); ++r)
        if (flavor() == Flavor::constructing ? r < nu : r >= nu)
            out.push_back(order_.at(r));
    std::sort(out.begin(), out.end());
    return out;
}

CheckResult check_retraction(const Graph& g, std::span<const Vertex> f, std::span<const Vertex> target) {
    if (f.size() != g.order())
        throw DomainError("vertex map is not total on the graph");
    std::vector<char> in_target(g.order(), 0);
    for (Vertex h : target) {
        g.require(h);
        in_target[static_cast<std::size_t>(h)] = 1;
    }
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
        Vertex image = f[static_cast<std::size_t>(v)];
        if (!g.contains(image) || !in_target[static_cast<std::size_t>(image)])
            return CheckResult::fail(-1, v, "image of " + g.name(v) + " lies outside the target");
        if (in_target[static_cast<std::size_t>(v)] && image != v)
            return CheckResult::fail(-1, v, "target vertex " + g.name(v) + " is not fixed");
    }
    for (auto [u, v] : g.edges()) {
        Vertex fu = f[static_cast<std::size_t>(u)];
        Vertex fv = f[static_cast<std::size_t>(v)];
        if (!g.adjacent(fu, fv))
            return CheckResult::fail(-1, u,
                                     "edge " + g.name(u) + "-" + g.name(v) + " maps to non-edge " + g.name(fu) +
                                         "-" + g.name(fv));
    }
    return CheckResult::pass();
}

CheckResult check_shifted_edge_property(const RetractionFamily& family, const Graph& g, Rank first, Rank last) {
    if (family.size() != g.order())
        throw DomainError("retraction family and graph differ in size");
    for (Rank nu = first; nu <= last; ++nu) {
        for (Vertex mu = 0; mu < static_cast<Vertex>(g.order()); ++mu) {
            auto upper = family.try_rho(nu + 1, mu);
            if (!upper)
                throw NonTotalRetraction(nu + 1, mu);
            auto check_pair = [&](Vertex eta) -> CheckResult {
                auto lower = family.try_rho(nu, eta);
                if (!lower)
                    throw NonTotalRetraction(nu, eta);
                if (!g.adjacent(*upper, *lower))
                    return CheckResult::fail(nu, mu,
                                             "rho_" + std::to_string(nu + 1) + "(" + g.name(mu) + ") = " +
                                                 g.name(*upper) + " not adjacent to rho_" + std::to_string(nu) +
                                                 "(" + g.name(eta) + ") = " + g.name(*lower));
                return CheckResult::pass();
            };
            if (auto r = check_pair(mu); !r)
                return r;
            for (Vertex eta : g.open_neighbors(mu))
                if (auto r = check_pair(eta); !r)
                    return r;
        }
    }
    return CheckResult::pass();
}

CheckResult check_shifted_edge_property(const RetractionFamily& family, const Graph& g) {
    for (Rank nu = family.min_rank(); nu + 1 <= family.max_rank(); ++nu) {
        if (!family.total_at(nu) || !family.total_at(nu + 1))
            continue;
        if (auto r = check_shifted_edge_property(family, g, nu, nu); !r)
            return r;
    }
    return CheckResult::pass();
}

} // namespace copwin
