#pragma once

#include <vector>

#include "entgeo/complex_matrix.hpp"

namespace entgeo {

/// Eigensystem of a Hermitian matrix. `values` are ascending; column k of
/// `vectors` is the unit eigenvector of values[k]. Each eigenvector is
/// phase-fixed so that its first nonzero component is real and positive,
/// and exactly degenerate clusters are ordered by lexicographic comparison
/// of the phase-fixed vectors, which makes the decomposition reproducible.
struct EigenDecomposition {
    std::vector<double> values;
    CMatrix vectors;
};

/// Hermitian eigendecomposition by cyclic Jacobi rotations.
///
/// The matrix must be Hermitian within 1e-12 (relative to its largest entry
/// for matrices with entries above one), otherwise NonHermitian is thrown.
/// Sweeps run until the off-diagonal Frobenius norm drops below
/// 1e-14 * ||H||_F; NoConvergence is thrown after 100 sweeps. Matrices whose
/// imaginary parts are all exactly zero take a real-arithmetic path with the
/// same rotation sequence.
EigenDecomposition herm_eig(const CMatrix &h);

} // namespace entgeo
