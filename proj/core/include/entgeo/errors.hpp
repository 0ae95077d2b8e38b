#pragma once

#include <stdexcept>
#include <string>

namespace entgeo {

// Shape or dimension of an argument does not fit the operation.
struct ShapeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Matrix fails the Hermiticity precondition of an eigensolve.
struct NonHermitian : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Iterative routine exceeded its sweep/iteration budget.
struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation only defined for a restricted set of sizes.
struct SizeUnsupported : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Local dimensions outside the supported {2,3} x (>=2) family.
struct BadDims : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Vector or state norm deviates too far from one.
struct NotNormalized : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// State file is malformed (bad JSON, wrong amplitude count, non-finite entries).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Subsystem-A dimension of the state does not match the operation.
struct DimMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Frame fails the unitarity invariant.
struct NotUnitary : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Density matrix argument is not Hermitian/PSD/trace-one.
struct InvalidDensity : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Site index outside the chain/register.
struct BadSite : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Requested system size above the dense-diagonalization cap.
struct TooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Query argument outside the admissible interval.
struct OutOfRange : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace entgeo
