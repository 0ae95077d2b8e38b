#pragma once

#include <array>
#include <optional>

#include "entgeo/state.hpp"

namespace entgeo {

/// Angles of the Hermitian, unitary, traceless single-qubit operator
///   O(theta, phi) = cos(theta) sz + sin(theta) cos(phi) sx
///                 + sin(theta) sin(phi) sy .
/// theta is clamped to [0, pi] and phi wrapped into [0, 2 pi) on
/// construction, so every operator has one canonical representative.
struct QubitUnitaryParams {
    double theta;
    double phi;
    QubitUnitaryParams(double theta_raw, double phi_raw);
};

/// Pauli expectation values M_alpha = <Psi| s^alpha_A (x) 1_B |Psi>.
struct BlochVector {
    double mx;
    double my;
    double mz;
    double norm_squared() const { return mx * mx + my * my + mz * mz; }
};

/// Result of minimizing the squared distance over all single-qubit
/// operators. The two parameter pairs are the antipodal extrema, whose
/// operators are O and -O (images differing by a global pi phase).
/// `degenerate` marks the maximally entangled case M = 0, where every
/// operator attains the minimum and the canonical pair (0,0), (pi,pi)
/// is reported.
struct SquoMinimum {
    QubitUnitaryParams params1;
    QubitUnitaryParams params2;
    double min_d2;
    bool degenerate;
};

struct SquoSeparability {
    bool separable;
    std::optional<QubitUnitaryParams> preserving;
};

/// 2x2 matrix of O(theta, phi). Hermitian, traceless, O^2 = 1.
CMatrix build_squo(const QubitUnitaryParams &p);

/// (O (x) 1_B) |psi>; requires dim_a = 2.
BipartiteState apply_squo(const BipartiteState &psi, const QubitUnitaryParams &p);

/// Requires dim_a = 2.
BlochVector bloch_expectations(const BipartiteState &psi);

/// Squared Euclidean distance between |psi> and its image,
/// d^2 = 1 - (M_z cos(theta) + M_x sin(theta) cos(phi) + M_y sin(theta) sin(phi))^2.
double squared_distance(const BipartiteState &psi, const QubitUnitaryParams &p);

/// Analytic minimizer: min d^2 = 1 - (M_x^2 + M_y^2 + M_z^2), attained along
/// the +/- Bloch directions of M.
SquoMinimum optimal_squo(const BipartiteState &psi);

/// Parameters of -O: (pi - theta, phi + pi mod 2 pi).
QubitUnitaryParams orthogonal_squo(const QubitUnitaryParams &p);

/// Local factorizability F_A = (2 Tr(rho_A rho_p) - 1)^2 against the pure
/// qubit state rho_p = |q><q|. Throws NotNormalized unless |q| = 1 within
/// 1e-12.
double local_factorizability(const BipartiteState &psi, const std::array<Complex, 2> &pure_qubit);

/// Angles of the operator whose +1 eigenvector is the given unit qubit state.
QubitUnitaryParams params_from_plus_eigenvector(const std::array<Complex, 2> &pure_qubit);

/// Separable iff the minimal squared distance is at most tol; for separable
/// states `preserving` holds the operator that leaves the state invariant.
SquoSeparability is_separable(const BipartiteState &psi, double tol = 1e-10);

} // namespace entgeo
