#pragma once

#include <stdexcept>
#include <string>

namespace modspace {

// Input violates a documented precondition (bad coefficients, gcd(p,q) != 1, ...).
// std::invalid_argument is used directly for these; the types below mark failures
// that are detected numerically rather than structurally.

// A quantity that must vanish (or be real) within tolerance failed the check.
struct ToleranceError : std::runtime_error {
    explicit ToleranceError(const std::string& what) : std::runtime_error(what) {}
};

// The map (or a derived object) is too close to a degenerate configuration to use.
struct DegenerateMapError : std::runtime_error {
    explicit DegenerateMapError(const std::string& what) : std::runtime_error(what) {}
};

// An iterative solve ran out of iterations/seeds without meeting its target.
struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace modspace
