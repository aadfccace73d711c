#ifndef XLAG_ERRORS_HPP
#define XLAG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace xlag {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact-algebra layer
struct ZeroPolynomial : Error { using Error::Error; };
struct StructuralError : Error { using Error::Error; };

// construction layer
struct ConstraintViolation : Error { using Error::Error; };
struct DegenerateSeed : Error { using Error::Error; };
struct DegenerateWronskian : Error { using Error::Error; };
struct InadmissibleDenominator : Error { using Error::Error; };
struct IdentityViolation : Error { using Error::Error; };

// EOP solver
struct NoPolynomialSolution : Error { using Error::Error; };
struct AmbiguousSolution : Error { using Error::Error; };

// numerics
struct PoleEncountered : Error { using Error::Error; };
struct ConvergenceFailure : Error { using Error::Error; };
struct QuadratureNonConvergence : Error { using Error::Error; };

} // namespace xlag

#endif
