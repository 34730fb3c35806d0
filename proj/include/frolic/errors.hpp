#pragma once

#include <stdexcept>
#include <string>

namespace frolic {

/// Base class for every failure the library raises on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Scalar inversion at a jet whose value part is zero: the evaluation left
/// the domain of the function being differentiated.
struct ZeroValuePart : Error {
    using Error::Error;
};

/// Matrix inversion whose value-part solve hit a vanishing pivot.
struct SingularValuePart : Error {
    using Error::Error;
};

/// Elementary function evaluated outside its real domain (log at 0, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Chart requested at a point outside its declared domain, or on a space
/// that has no chart.
struct ChartDomainError : Error {
    using Error::Error;
};

/// Operation on two tangent vectors that requires a shared base point.
struct BasePointMismatch : Error {
    using Error::Error;
};

/// Product-structure operation on a space that is not a product.
struct NotAProductSpace : Error {
    using Error::Error;
};

/// Subset construction given a curve that leaves the subset.
struct CurveEscapesSubset : Error {
    using Error::Error;
};

/// Bad builtin name or parameter out of the supported range.
struct InvalidParameter : Error {
    using Error::Error;
};

/// Pushforward check handed a map that fails the sampled homomorphism test.
struct NotAHomomorphism : Error {
    using Error::Error;
};

} // namespace frolic
