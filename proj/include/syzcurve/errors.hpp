#pragma once

#include <stdexcept>
#include <string>

namespace syzcurve {

// Base of all library errors. InputError maps to CLI exit code 2,
// InternalError to exit code 3 (expectation mismatches in batch mode use 1).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InputError : public Error {
public:
    using Error::Error;
};

class InternalError : public Error {
public:
    using Error::Error;
};

// --- input-side conditions ---

class SyntaxError : public InputError {
public:
    using InputError::InputError;
};

class NotHomogeneous : public InputError {
public:
    using InputError::InputError;
};

class ZeroPolynomial : public InputError {
public:
    using InputError::InputError;
};

class DegreeTooSmall : public InputError {
public:
    using InputError::InputError;
};

// Raised by the Hilbert-function stabilization guard when the Jacobian
// algebra keeps growing; the usual cause is a non-reduced input curve.
class NonReducedInput : public InputError {
public:
    using InputError::InputError;
};

class DimensionMismatch : public InputError {
public:
    using InputError::InputError;
};

class QOutOfRange : public InputError {
public:
    using InputError::InputError;
};

class NotApplicable : public InputError {
public:
    using InputError::InputError;
};

class EvenDegree : public InputError {
public:
    using InputError::InputError;
};

class RangeError : public InputError {
public:
    using InputError::InputError;
};

class FileNotFound : public InputError {
public:
    using InputError::InputError;
};

class CorpusParseError : public InputError {
public:
    using InputError::InputError;
};

// --- internal consistency failures ---

// Euler relation x*f_x + y*f_y + z*f_z = d*f failed; only an arithmetic
// bug can trigger this.
class EulerCheckFailed : public InternalError {
public:
    using InternalError::InternalError;
};

// Defect profile failed duality or the Lefschetz chain even after
// escalating the saturation exponent floor.
class ProfileInconsistent : public InternalError {
public:
    using InternalError::InternalError;
};

// The nu-based and tau-based free/nearly-free characterizations disagree.
class InternalInconsistency : public InternalError {
public:
    using InternalError::InternalError;
};

// A proven mdr bound is violated; wrong cuspidality assertion or a bug.
class BoundViolated : public InternalError {
public:
    using InternalError::InternalError;
};

// The monodromy eigenspace inequality failed at some eigenvalue index.
class InequalityViolated : public InternalError {
public:
    using InternalError::InternalError;
};

}  // namespace syzcurve
