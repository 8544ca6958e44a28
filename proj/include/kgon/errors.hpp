#pragma once

#include <stdexcept>
#include <string>

namespace kgon {

// Base type for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain (k < 3, n < k, size guards, ...).
struct InvalidParams : Error {
    using Error::Error;
};

// A rotation system violating simplicity, symmetry or connectivity.
struct MalformedRotation : Error {
    using Error::Error;
};

// A traced face repeats a vertex (or is shorter than a triangle), so
// face-census identities and hub insertion are undefined for the graph.
struct NotTwoConnected : Error {
    using Error::Error;
};

// Exhaustive search hit its node cap before finishing a level.
struct BudgetExceeded : Error {
    BudgetExceeded(const std::string& msg, long long examined_)
        : Error(msg), examined(examined_) {}
    long long examined;
};

// Circle packing solver ran out of sweeps.
struct NoConvergence : Error {
    NoConvergence(const std::string& msg, long long sweeps_, double residual_)
        : Error(msg), sweeps(sweeps_), residual(residual_) {}
    long long sweeps;
    double residual;  // best angle-sum residual reached
};

// A packing radius underflowed the configured floor.
struct DegenerateRadius : Error {
    using Error::Error;
};

// Adjacency reconstructed from circle tangencies disagrees with the graph.
struct AdjacencyMismatch : Error {
    using Error::Error;
};

// Bug guard: an internally assembled structure failed its own checks.
struct InternalInvariantViolation : Error {
    using Error::Error;
};

// File-level problem in the CLI; message says whether the file is
// missing or malformed.
struct IoError : Error {
    using Error::Error;
};

}  // namespace kgon
