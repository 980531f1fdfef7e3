#pragma once

#include <stdexcept>
#include <string>

namespace lorsph {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Gamma evaluated at a non-positive real integer.
struct PoleError : Error {
    using Error::Error;
};

/// 2F1 lower parameter hits a pole before the series terminates.
struct ParameterPoleError : Error {
    using Error::Error;
};

/// Series truncation cap reached, or the argument regime cannot converge.
struct NoConvergenceError : Error {
    using Error::Error;
};

/// Weight-triple or representation-label invariants violated.
struct IndexError : Error {
    using Error::Error;
};

struct OverflowError : Error {
    using Error::Error;
};

/// Finite-difference evaluation point too close to a singular point.
struct SingularPointError : Error {
    using Error::Error;
};

/// Angle relations of a composed rotation hit a branch point.
struct BranchPointError : Error {
    using Error::Error;
};

/// Euler-angle extraction attempted on a parametrization branch cut.
struct DegenerateExtractionError : Error {
    using Error::Error;
};

/// Malformed CLI/library request.
struct ValidationError : Error {
    using Error::Error;
};

}  // namespace lorsph
