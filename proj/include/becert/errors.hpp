#pragma once

#include <stdexcept>
#include <string>

namespace becert {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input matrix is not Hermitian within the documented tolerance.
struct NotHermitianError : Error {
    using Error::Error;
};

/// An iterative routine hit its iteration cap before converging.
struct NoConvergenceError : Error {
    using Error::Error;
};

/// A vector argument that must be nonzero has zero norm.
struct ZeroVectorError : Error {
    using Error::Error;
};

/// Matrix dimensions do not match the required bipartite layout.
struct BadDimsError : Error {
    using Error::Error;
};

/// Family parameters violate |a|^2+|b|^2+|c|^2+|d|^2 = 1.
struct NormalizationError : Error {
    using Error::Error;
};

/// The mixing parameter lies outside [0, 1].
struct EpsRangeError : Error {
    using Error::Error;
};

/// A loaded or constructed matrix fails the density-matrix checks.
struct StateValidationError : Error {
    using Error::Error;
};

/// Closed-form eigenvalue radicand came out negative beyond roundoff.
struct NegativeRadicandError : Error {
    using Error::Error;
};

/// A two-parameter product family was instantiated with a zero leading scalar.
struct DegenerateScalarError : Error {
    using Error::Error;
};

/// Span sampling failed to reach a stable rank within the batch budget.
struct NoStabilizationError : Error {
    using Error::Error;
};

} // namespace becert
