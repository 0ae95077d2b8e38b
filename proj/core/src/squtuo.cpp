#include "entgeo/squtuo.hpp"

#include <algorithm>
#include <cmath>

#include "entgeo/eig.hpp"

namespace entgeo {

namespace {
constexpr double kTwoPiOver3 = 2.0 * 3.14159265358979323846 / 3.0;
const Complex kOmega{std::cos(kTwoPiOver3), std::sin(kTwoPiOver3)};

double unitarity_defect(const CMatrix &v) {
    const CMatrix g = matmul(adjoint(v), v);
    double m = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            m = std::max(m, std::abs(g(i, j) - (i == j ? Complex(1.0, 0.0) : Complex(0.0, 0.0))));
    return m;
}

// Diagonal of V^dagger rho V (real for Hermitian rho).
std::array<double, 3> frame_diagonal(const CMatrix &rho, const CMatrix &v) {
    std::array<double, 3> d{};
    for (std::size_t k = 0; k < 3; ++k) {
        Complex acc = 0.0;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                acc += std::conj(v(i, k)) * rho(i, j) * v(j, k);
        d[k] = acc.real();
    }
    return d;
}
} // namespace

QutritBasis::QutritBasis(CMatrix frame) : frame_(std::move(frame)) {
    if (frame_.rows() != 3 || frame_.cols() != 3)
        throw NotUnitary("QutritBasis: frame must be 3x3");
    if (unitarity_defect(frame_) > 1e-10)
        throw NotUnitary("QutritBasis: frame is not unitary within 1e-10");
}

CMatrix build_squtuo(const QutritBasis &basis) {
    const CMatrix &v = basis.frame();
    if (unitarity_defect(v) > 1e-10)
        throw NotUnitary("build_squtuo: frame is not unitary within 1e-10");
    CMatrix d(3, 3);
    d(0, 0) = kOmega;
    d(1, 1) = 1.0;
    d(2, 2) = std::conj(kOmega);
    return matmul(matmul(v, d), adjoint(v));
}

Complex overlap_qutrit(const BipartiteState &psi, const QutritBasis &basis) {
    if (psi.dim_a() != 3) throw DimMismatch("overlap_qutrit: state is not (3 x D)");
    const ReducedDensity rd = reduced_density(psi);
    const auto d = frame_diagonal(rd.rho, basis.frame());
    return kOmega * d[0] + d[1] + std::conj(kOmega) * d[2];
}

double squared_distance_qutrit(const BipartiteState &psi, const QutritBasis &basis) {
    if (psi.dim_a() != 3) throw DimMismatch("squared_distance_qutrit: state is not (3 x D)");
    const ReducedDensity rd = reduced_density(psi);
    const auto d = frame_diagonal(rd.rho, basis.frame());
    const double sum_sq = d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
    return std::clamp(1.5 * (1.0 - sum_sq), 0.0, 1.0);
}

SqutuoMinimum min_squared_distance_qutrit(const BipartiteState &psi) {
    if (psi.dim_a() != 3) throw DimMismatch("min_squared_distance_qutrit: state is not (3 x D)");
    const ReducedDensity rd = reduced_density(psi);
    const EigenDecomposition eig = herm_eig(rd.rho);
    double sum_sq = 0.0;
    for (double g : eig.values) sum_sq += g * g;
    // herm_eig sorts ascending; the frame wants descending eigenvalues so the
    // largest one sits on the +1 slot of the generator.
    CMatrix frame(3, 3);
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t r = 0; r < 3; ++r) frame(r, k) = eig.vectors(r, 2 - k);
    return SqutuoMinimum{QutritBasis(std::move(frame)),
                         std::clamp(1.5 * (1.0 - sum_sq), 0.0, 1.0)};
}

SqutuoSeparability is_separable_qutrit(const BipartiteState &psi, double tol) {
    SqutuoMinimum m = min_squared_distance_qutrit(psi);
    if (m.min_d2 <= tol) return SqutuoSeparability{true, std::move(m.basis)};
    return SqutuoSeparability{false, std::nullopt};
}

} // namespace entgeo
