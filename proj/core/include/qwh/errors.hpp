#ifndef QWH_ERRORS_HPP
#define QWH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qwh {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Requested degree lies outside the polynomial cutoff.
struct DegreeOutOfRangeError : Error {
    using Error::Error;
};

/// An operation would push a nonzero coefficient past the cutoff under the
/// strict overflow policy.
struct OverflowError : Error {
    using Error::Error;
};

/// q = 1 where the q-derivative denominator appears.
struct DegenerateDeformationError : Error {
    using Error::Error;
};

struct DimensionError : Error {
    using Error::Error;
};

/// rho = 0 is not a canonical transformation.
struct SingularScalingError : Error {
    using Error::Error;
};

/// Operation is restricted to real deformation parameters.
struct RealParameterRequiredError : Error {
    using Error::Error;
};

/// Test functions live on different grids.
struct IncompatibleGridError : Error {
    using Error::Error;
};

}  // namespace qwh

#endif
