#include "entgeo/squo.hpp"

#include <algorithm>
#include <cmath>

namespace entgeo {

namespace {
constexpr double kPi = 3.14159265358979323846;

double wrap_phi(double phi) {
    double w = std::fmod(phi, 2.0 * kPi);
    if (w < 0.0) w += 2.0 * kPi;
    if (w == 2.0 * kPi) w = 0.0;
    return w;
}
} // namespace

QubitUnitaryParams::QubitUnitaryParams(double theta_raw, double phi_raw)
    : theta(std::clamp(theta_raw, 0.0, kPi)), phi(wrap_phi(phi_raw)) {}

CMatrix build_squo(const QubitUnitaryParams &p) {
    const double ct = std::cos(p.theta), st = std::sin(p.theta);
    const double cp = std::cos(p.phi), sp = std::sin(p.phi);
    // [[cos t, sin t e^{-i phi}], [sin t e^{i phi}, -cos t]]
    CMatrix o(2, 2);
    o(0, 0) = ct;
    o(0, 1) = Complex(st * cp, -st * sp);
    o(1, 0) = Complex(st * cp, st * sp);
    o(1, 1) = -ct;
    return o;
}

BipartiteState apply_squo(const BipartiteState &psi, const QubitUnitaryParams &p) {
    if (psi.dim_a() != 2) throw DimMismatch("apply_squo: state is not (2 x D)");
    const CMatrix o = build_squo(p);
    return BipartiteState(2, psi.dim_b(), matmul(o, psi.coeffs()));
}

BlochVector bloch_expectations(const BipartiteState &psi) {
    if (psi.dim_a() != 2) throw DimMismatch("bloch_expectations: state is not (2 x D)");
    const CMatrix &c = psi.coeffs();
    double mz = 0.0;
    Complex cross = 0.0; // sum_n c*_{n,up} c_{n,down}
    for (std::size_t n = 0; n < psi.dim_b(); ++n) {
        mz += std::norm(c(0, n)) - std::norm(c(1, n));
        cross += std::conj(c(0, n)) * c(1, n);
    }
    return BlochVector{2.0 * cross.real(), 2.0 * cross.imag(), mz};
}

double squared_distance(const BipartiteState &psi, const QubitUnitaryParams &p) {
    const BlochVector m = bloch_expectations(psi);
    const double st = std::sin(p.theta);
    const double overlap =
        m.mz * std::cos(p.theta) + m.mx * st * std::cos(p.phi) + m.my * st * std::sin(p.phi);
    return std::clamp(1.0 - overlap * overlap, 0.0, 1.0);
}

SquoMinimum optimal_squo(const BipartiteState &psi) {
    const BlochVector m = bloch_expectations(psi);
    const double m2 = m.norm_squared();
    const double min_d2 = std::clamp(1.0 - m2, 0.0, 1.0);
    if (m2 < 1e-24) {
        // Maximally entangled: the arctangent formulas are 0/0 and every
        // operator is minimal. Report a canonical antipodal pair.
        return SquoMinimum{QubitUnitaryParams(0.0, 0.0), QubitUnitaryParams(kPi, kPi), min_d2,
                           true};
    }
    const double mperp = std::hypot(m.mx, m.my);
    const double theta = std::atan2(mperp, m.mz); // in [0, pi]
    const double phi = std::atan2(m.my, m.mx);    // wrapped by the ctor
    QubitUnitaryParams p1(theta, phi);
    return SquoMinimum{p1, orthogonal_squo(p1), min_d2, false};
}

QubitUnitaryParams orthogonal_squo(const QubitUnitaryParams &p) {
    return QubitUnitaryParams(kPi - p.theta, p.phi + kPi);
}

double local_factorizability(const BipartiteState &psi, const std::array<Complex, 2> &pure_qubit) {
    const double qn = std::sqrt(std::norm(pure_qubit[0]) + std::norm(pure_qubit[1]));
    if (std::abs(qn - 1.0) > 1e-12)
        throw NotNormalized("local_factorizability: pure_qubit is not unit norm");
    const ReducedDensity rd = reduced_density(psi);
    // <q| rho |q>
    Complex ov = 0.0;
    for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t t = 0; t < 2; ++t)
            ov += std::conj(pure_qubit[s]) * rd.rho(s, t) * pure_qubit[t];
    const double f = 2.0 * ov.real() - 1.0;
    return std::clamp(f * f, 0.0, 1.0);
}

QubitUnitaryParams params_from_plus_eigenvector(const std::array<Complex, 2> &pure_qubit) {
    const double qn = std::sqrt(std::norm(pure_qubit[0]) + std::norm(pure_qubit[1]));
    if (std::abs(qn - 1.0) > 1e-12)
        throw NotNormalized("params_from_plus_eigenvector: state is not unit norm");
    const double a0 = std::abs(pure_qubit[0]), a1 = std::abs(pure_qubit[1]);
    const double theta = 2.0 * std::atan2(a1, a0);
    // |+> = (cos(t/2), e^{i phi} sin(t/2)) up to a global phase; phi is the
    // relative phase, irrelevant when either component vanishes.
    double phi = 0.0;
    if (a0 > 1e-15 && a1 > 1e-15) phi = std::arg(pure_qubit[1] * std::conj(pure_qubit[0]));
    return QubitUnitaryParams(theta, phi);
}

SquoSeparability is_separable(const BipartiteState &psi, double tol) {
    const SquoMinimum opt = optimal_squo(psi);
    if (opt.min_d2 <= tol) return SquoSeparability{true, opt.params1};
    return SquoSeparability{false, std::nullopt};
}

} // namespace entgeo
