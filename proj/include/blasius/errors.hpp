#pragma once

#include <stdexcept>
#include <string>

namespace blasius {

/// Base class for all failures raised by the solver pipeline.
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument or state outside the mathematical domain of an operation.
class DomainError : public SolverError {
public:
    using SolverError::SolverError;
};

/// The step controller would need a step below the configured minimum.
class StepUnderflow : public SolverError {
public:
    using SolverError::SolverError;
};

/// The tail integrand fails to enter its exponential-decay regime.
class NoDecay : public SolverError {
public:
    using SolverError::SolverError;
};

/// No certified truncation horizon exists below the search cap.
class HorizonOverflow : public SolverError {
public:
    using SolverError::SolverError;
};

/// The shooting endpoints do not straddle the target slope.
class BracketFailure : public SolverError {
public:
    using SolverError::SolverError;
};

} // namespace blasius
