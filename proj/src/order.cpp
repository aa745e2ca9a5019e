#include "copwin/order.hpp"

#include "copwin/errors.hpp"

namespace copwin {

const char* to_string(Flavor f) noexcept {
    return f == Flavor::constructing ? "constructing" : "dismantling";
}

Order::Order(Flavor flavor, std::vector<Vertex> sequence, std::vector<Vertex> delta)
    : flavor_(flavor), sequence_(std::move(sequence)), delta_(std::move(delta)) {
    const std::size_t n = sequence_.size();
    if (n == 0)
        throw DomainError("empty order");
    if (delta_.size() != n)
        throw DomainError("domination map size does not match order size");
    rank_.assign(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        Vertex v = sequence_[i];
        if (v < 0 || static_cast<std::size_t>(v) >= n || rank_[static_cast<std::size_t>(v)] >= 0)
            throw DomainError("order sequence is not a permutation of 0.." + std::to_string(n - 1));
        rank_[static_cast<std::size_t>(v)] = static_cast<Rank>(i);
    }
    for (Vertex d : delta_)
        if (d != kNoVertex && (d < 0 || static_cast<std::size_t>(d) >= n))
            throw DomainError("domination map entry out of range: " + std::to_string(d));
}

Vertex Order::at(Rank r) const {
    if (r < 0 || static_cast<std::size_t>(r) >= size())
        throw DomainError("rank out of range: " + std::to_string(r));
    return sequence_[static_cast<std::size_t>(r)];
}

Rank Order::rank(Vertex v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= size())
        throw DomainError("vertex not in order: " + std::to_string(v));
    return rank_[static_cast<std::size_t>(v)];
}

Vertex Order::delta(Vertex v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= size())
        throw DomainError("vertex not in order: " + std::to_string(v));
    return delta_[static_cast<std::size_t>(v)];
}

Vertex Order::terminal() const {
    return flavor_ == Flavor::constructing ? sequence_.front() : sequence_.back();
}

} // namespace copwin
