#pragma once

#include <stdexcept>
#include <string>

namespace mfm {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Gamma (or a gamma-backed formula) was evaluated at or near a nonpositive integer.
class PoleError : public Error {
public:
    using Error::Error;
};

// A result exceeds the representable double exponent range.
class OverflowError : public Error {
public:
    using Error::Error;
};

// A lower series parameter sits at or near {0, -1, -2, ...}.
class LowerParameterPoleError : public Error {
public:
    using Error::Error;
};

// The series did not meet its tail tolerance within the term cap.
class NonConvergenceError : public Error {
public:
    using Error::Error;
};

// A multi-valued factor was requested outside the supported branch domain.
class BranchError : public Error {
public:
    using Error::Error;
};

// A closed-form denominator is too close to zero for the requested evaluation.
class DegenerateParameterError : public Error {
public:
    using Error::Error;
};

// A combinatorial enumeration was requested beyond its size cap.
class SizeError : public Error {
public:
    using Error::Error;
};

// Rejection sampling failed to produce an admissible draw within the attempt cap.
class ExhaustionError : public Error {
public:
    using Error::Error;
};

// Quadrature dimension above the supported cap.
class DimensionError : public Error {
public:
    using Error::Error;
};

// An integrand exponent violates the endpoint integrability condition.
class IntegrabilityError : public Error {
public:
    using Error::Error;
};

// Real-part conditions required by the quadrature path do not hold.
class ParameterRangeError : public Error {
public:
    using Error::Error;
};

} // namespace mfm
