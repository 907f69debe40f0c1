#pragma once

#include <stdexcept>
#include <string>

namespace nonholo {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An evaluator returned non-finite values or threw at a probe point.
struct EvaluationFailure : Error {
    using Error::Error;
};

/// A factorization failed or a reciprocal-condition estimate fell below 1e-12.
struct SingularMatrix : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

/// A constraint Jacobian lost rank where full rank is required.
struct RankDeficient : Error {
    using Error::Error;
};

/// Operation requires a constraint linear in the velocities.
struct NotLinear : Error {
    using Error::Error;
};

struct InvalidParameter : Error {
    using Error::Error;
};

/// Initial state of an implicit-method run does not satisfy the constraint.
struct OffConstraint : Error {
    OffConstraint(const std::string& msg, double residual_)
        : Error(msg), residual(residual_) {}
    double residual;
};

/// Regularity (maximal rank) failed at the given time; t = 0 means at start.
struct SingularStateEncountered : Error {
    SingularStateEncountered(const std::string& msg, double time_)
        : Error(msg), time(time_) {}
    double time;
};

/// Constraint residual exceeded the configured abort threshold mid-run.
struct DriftExceeded : Error {
    DriftExceeded(const std::string& msg, double time_, double residual_)
        : Error(msg), time(time_), residual(residual_) {}
    double time;
    double residual;
};

}  // namespace nonholo
