#pragma once

#include <stdexcept>
#include <string>

namespace cbs {

// Parameters outside the dispersive regime: a detuning divisor vanished.
struct ZeroDetuning : std::runtime_error {
    explicit ZeroDetuning(const std::string& what) : std::runtime_error(what) {}
};

// Truncated coherent state would lose more norm than the caller allows.
struct CutoffTooSmall : std::runtime_error {
    CutoffTooSmall(double leakage, double tolerance)
        : std::runtime_error("fock cutoff too small: leakage " + std::to_string(leakage) +
                             " exceeds tolerance " + std::to_string(tolerance)),
          leakage(leakage), tolerance(tolerance) {}
    double leakage;
    double tolerance;
};

struct ZeroState : std::runtime_error {
    explicit ZeroState(const std::string& what) : std::runtime_error(what) {}
};

struct NonUnitary : std::runtime_error {
    explicit NonUnitary(const std::string& what) : std::runtime_error(what) {}
};

struct StepFailure : std::runtime_error {
    explicit StepFailure(const std::string& what) : std::runtime_error(what) {}
};

// The swap relation 2*chi0*sin(delta_f*t/2)/delta_f = pi/2 has no solution.
struct SwapUnreachable : std::runtime_error {
    explicit SwapUnreachable(const std::string& what) : std::runtime_error(what) {}
};

// A validity inequality failed where an operation requires the dispersive regime.
struct RegimeViolation : std::runtime_error {
    explicit RegimeViolation(const std::string& what) : std::runtime_error(what) {}
};

// A measurement branch with (near-)zero probability was requested.
struct ZeroBranch : std::runtime_error {
    explicit ZeroBranch(const std::string& what) : std::runtime_error(what) {}
};

struct NotSECSShape : std::runtime_error {
    explicit NotSECSShape(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroDenominator : std::runtime_error {
    explicit ZeroDenominator(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cbs
