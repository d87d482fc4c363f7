#pragma once

#include <stdexcept>
#include <string>

namespace zetalab {

/// Base of every failure raised by the library. Evaluators never return NaN
/// as an error signal; they throw one of the subclasses below.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public NumericError {
public:
    using NumericError::NumericError;
};

/// Evaluation requested exactly at a pole (s = 1, nonpositive integers for Gamma).
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Request is well-posed but beyond what the configured evaluator supports.
class CapabilityError : public NumericError {
public:
    using NumericError::NumericError;
};

/// Quadrature or iteration failed to reach the requested tolerance.
class ToleranceError : public NumericError {
public:
    using NumericError::NumericError;
};

/// A truncated series could not certify its tail bound.
class TruncationError : public ToleranceError {
public:
    using ToleranceError::ToleranceError;
};

/// Two independent evaluation routes disagree beyond their certified error.
class AccuracyError : public NumericError {
public:
    using NumericError::NumericError;
};

/// A zero of zeta sits too close to a contour for the argument principle.
class BoundaryProximityError : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace zetalab
