#pragma once

#include <optional>

#include "entgeo/state.hpp"

namespace entgeo {

/// Orthonormal frame defining a single-qutrit unitary: the columns of
/// `frame` are the eigenvectors |+>, |0>, |-> of the spin-1 generator
/// O_hat = diag(1, 0, -1) written in that basis. Construction throws
/// NotUnitary unless frame^dagger frame = 1 within 1e-10.
class QutritBasis {
  public:
    explicit QutritBasis(CMatrix frame);
    const CMatrix &frame() const { return frame_; }

  private:
    CMatrix frame_;
};

struct SqutuoMinimum {
    QutritBasis basis; // eigenvector frame of rho_A, columns by descending eigenvalue
    double min_d2;
};

struct SqutuoSeparability {
    bool separable;
    std::optional<QutritBasis> preserving_frame;
};

/// U = V diag(e^{i 2pi/3}, 1, e^{-i 2pi/3}) V^dagger: unitary, traceless,
/// with the fixed nondegenerate spectrum of cube roots of unity.
CMatrix build_squtuo(const QutritBasis &basis);

/// <Psi| (U (x) 1_B) |Psi> = e^{i 2pi/3} r11 + r22 + e^{-i 2pi/3} r33 where
/// r_kk are the diagonal elements of rho_A in the frame. Requires dim_a = 3.
Complex overlap_qutrit(const BipartiteState &psi, const QutritBasis &basis);

/// d^2 = (3/2) [1 - (r11^2 + r22^2 + r33^2)], equal to 1 - |overlap|^2.
double squared_distance_qutrit(const BipartiteState &psi, const QutritBasis &basis);

/// Minimum over all frames, attained on the eigenbasis of rho_A:
/// min d^2 = (3/2) [1 - sum_k gamma_k^2] with gamma_k the eigenvalues.
/// The reported frame orders columns by descending gamma (largest gamma is
/// assigned the +1 eigenvalue of the generator).
SqutuoMinimum min_squared_distance_qutrit(const BipartiteState &psi);

/// Separable iff min d^2 <= tol; for separable states the preserving frame
/// maps the state to e^{i 2pi/3} times itself (unit fidelity image).
SqutuoSeparability is_separable_qutrit(const BipartiteState &psi, double tol = 1e-10);

} // namespace entgeo
