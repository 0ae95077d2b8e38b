#pragma once

#include <cstdint>

#include "entgeo/squo.hpp"
#include "entgeo/squtuo.hpp"

namespace entgeo {

/// Brute-force minimizers kept deliberately independent of the analytic
/// minimizers they validate: a (theta, phi) grid scan for qubits, Haar
/// frame sampling for qutrits, and the fixed-operator basis scan. Minima are
/// reduced with strict comparison, so ties resolve to the smallest theta,
/// then smallest phi (grid) or the lowest sample index (sampling), making
/// results independent of evaluation order.

struct GridMinimum {
    double min_d2;
    QubitUnitaryParams argmin;
};

/// Exhaustive scan of squared_distance over an inclusive theta grid on
/// [0, pi] (n_theta points) and a periodic phi grid on [0, 2 pi)
/// (n_phi points), followed by 20 rounds of golden-section coordinate
/// descent around the grid argmin. Requires n_theta, n_phi >= 2.
GridMinimum grid_min_squo(const BipartiteState &psi, std::size_t n_theta, std::size_t n_phi);

struct FrameMinimum {
    double min_d2;
    QutritBasis argmin;
};

/// Minimum of squared_distance_qutrit over `samples` Haar-random frames;
/// frame k uses the derived seed (seed ^ k).
FrameMinimum random_basis_min_squtuo(const BipartiteState &psi, std::size_t samples,
                                     std::uint64_t seed);

/// Haar-distributed random unitary for dim in {2, 3}: a Ginibre matrix is
/// QR-factorized (modified Gram-Schmidt) with the R diagonal kept real and
/// positive, which makes Q Haar-distributed.
CMatrix haar_unitary(std::size_t dim, std::uint64_t seed);

/// Minimum over Haar-random 2x2 frames of 4 r'_11 r'_22, the squared
/// distance of the fixed diag(1,-1) operator in a rotated basis. Converges
/// toward the tangle 4 gamma_1 gamma_2 from above.
double basis_scan_qubit(const BipartiteState &psi, std::size_t samples, std::uint64_t seed);

} // namespace entgeo
