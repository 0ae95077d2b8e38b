#pragma once

#include <optional>

#include "entgeo/measures.hpp"

namespace entgeo {

/// XY chain in a transverse field,
///   H = -J sum_j [ (1+gamma)/2 sx_j sx_{j+1} + (1-gamma)/2 sy_j sy_{j+1} ]
///       - h sum_j sz_j ,
/// open or periodic, sites indexed little-endian like MultiQubitState.
struct SpinChainSpec {
    std::size_t n_sites;
    double gamma;            // anisotropy in [0, 1]
    double field;            // transverse field h >= 0
    double coupling = 1.0;   // J
    bool periodic = false;
};

struct GroundStateResult {
    double energy;
    MultiQubitState state;
    double gap; // distance to the first excited level, >= 0
};

/// Dense 2^n x 2^n Hamiltonian (real entries, exactly Hermitian).
/// Throws TooLarge beyond n = 10.
CMatrix build_xy_hamiltonian(const SpinChainSpec &spec);

/// Lowest eigenpair. Dimensions up to 256 go through the dense eigensolver;
/// larger ones use shifted power iteration on (c 1 - H), c = ||H||_1, with a
/// deflated second pass for the gap. Residual ||H g - E0 g|| stays within
/// 1e-8 ||H||.
GroundStateResult ground_state(const CMatrix &h);

/// Excitation energy dE = <G| O^dag H O |G> - <G| H |G> of the single-qubit
/// operator O(theta, phi) applied at `site`. Nonnegative up to rounding.
double excitation_energy(const GroundStateResult &g, const CMatrix &h, std::size_t site,
                         const QubitUnitaryParams &p);

struct MinExcitation {
    double min_de;
    QubitUnitaryParams argmin;
};

/// Minimum of the excitation energy over the whole operator family, via a
/// 180 x 360 (theta, phi) grid plus golden-section refinement. Vanishes
/// exactly when the ground state factorizes at `site`.
MinExcitation min_excitation(const GroundStateResult &g, const CMatrix &h, std::size_t site);

/// Bisection search in (h_lo, h_hi) for a field where the ground state is
/// factorized at site 0: single-site tangle below 1e-8, cross-validated by
/// min_excitation below 1e-6. The bracket must straddle the factorization
/// predicate (one endpoint factorized, one entangled), otherwise nullopt.
/// h_lo >= h_hi is an error.
std::optional<double> find_factorizing_field(const SpinChainSpec &spec_template, double h_lo,
                                             double h_hi);

struct SweepRow {
    double h;
    double ground_energy;
    double tangle_site0;
    double min_de;
};

/// Field sweep emitting one row per point; the CSV columns are
/// `h,ground_energy,tangle_site0,min_dE`.
std::vector<SweepRow> sweep_excitation(const SpinChainSpec &spec_template, double h_min,
                                       double h_max, std::size_t steps);

} // namespace entgeo
