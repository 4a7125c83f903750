#pragma once

#include <stdexcept>
#include <string>

namespace gwp1 {

// Bad arguments or mismatched operands (CLI exit code 2).
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Two operands live in different coefficient rings or variable sets.
struct RingMismatch : ValidationError {
    using ValidationError::ValidationError;
};

// A coefficient was requested beyond the order the data is exact to (exit code 4).
struct InsufficientOrder : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two independent numerical routes disagree beyond tolerance (exit code 3).
struct RouteDisagreement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation point too close to a pole of the function.
struct SingularityError : ValidationError {
    using ValidationError::ValidationError;
};

// Series failed to meet its stopping rule within the term budget.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gwp1
