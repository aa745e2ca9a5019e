#pragma once

#include <stdexcept>
#include <string>

namespace copwin {

/// Argument outside an operation's domain: unknown vertex, empty vertex set,
/// malformed order, invalid generator parameters.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An order whose domination map cannot be followed (cycle, missing entry).
class InvalidOrder : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// rho_nu(mu) requested where the domination chain of mu never satisfies the
/// rank condition.
class NonTotalRetraction : public std::runtime_error {
public:
    NonTotalRetraction(int rank, int vertex)
        : std::runtime_error("retraction not total at rank " + std::to_string(rank) +
                             " for vertex " + std::to_string(vertex)),
          rank_(rank), vertex_(vertex) {}

    int rank() const noexcept { return rank_; }
    int vertex() const noexcept { return vertex_; }

private:
    int rank_;
    int vertex_;
};

/// A strategy asked to move from a configuration on which it is not defined.
class StrategyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ScriptError : public StrategyError {
public:
    using StrategyError::StrategyError;
};

/// A lazy graph oracle broke its contract (asymmetric, non-reflexive, unbounded).
class GeneratorContractViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a computed object contradicts a result it was supposed to
/// witness, e.g. an order recovered from a timing profile that does not verify.
class TheoremContradiction : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace copwin
