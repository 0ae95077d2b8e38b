#include "entgeo/measures.hpp"

#include <algorithm>
#include <cmath>

#include "entgeo/eig.hpp"

namespace entgeo {

double purity(const ReducedDensity &rho) {
    // Tr(rho^2) = sum_ij |rho_ij|^2 for Hermitian rho.
    double s = 0.0;
    for (const auto &v : rho.rho.data()) s += std::norm(v);
    return s;
}

double linear_entropy(const ReducedDensity &rho) {
    const double d = static_cast<double>(rho.dim);
    return std::clamp(d / (d - 1.0) * (1.0 - purity(rho)), 0.0, 1.0);
}

double tangle(const ReducedDensity &rho) {
    if (rho.dim != 2) throw SizeUnsupported("tangle: defined for qubit reductions only");
    return std::clamp(4.0 * det(rho.rho).real(), 0.0, 1.0);
}

double von_neumann(const ReducedDensity &rho) {
    const EigenDecomposition eig = herm_eig(rho.rho);
    double e = 0.0;
    for (double g : eig.values) {
        if (g < 0.0) g = 0.0; // PSD up to rounding
        if (g > 0.0) e -= g * std::log2(g);
    }
    return std::max(e, 0.0);
}

namespace {

// sy (x) sy is the real antidiagonal (-1, 1, 1, -1).
CMatrix spin_flip(const CMatrix &rho) {
    static const double y[4] = {-1.0, 1.0, 1.0, -1.0};
    CMatrix out(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            out(i, j) = y[i] * y[j] * std::conj(rho(3 - i, 3 - j));
    return out;
}

} // namespace

double concurrence(const CMatrix &rho_two_qubit) {
    if (rho_two_qubit.rows() != 4 || rho_two_qubit.cols() != 4)
        throw InvalidDensity("concurrence: density matrix must be 4x4");
    if (hermiticity_defect(rho_two_qubit) > 1e-10)
        throw InvalidDensity("concurrence: not Hermitian within 1e-10");
    if (std::abs(trace(rho_two_qubit) - Complex(1.0, 0.0)) > 1e-8)
        throw InvalidDensity("concurrence: trace deviates from 1");

    const EigenDecomposition base = herm_eig(rho_two_qubit);
    if (base.values.front() < -1e-9)
        throw InvalidDensity("concurrence: negative eigenvalue beyond 1e-9");

    // sqrt(rho) from the clipped spectrum.
    CMatrix sqrt_rho(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < 4; ++k) {
                const double g = std::max(base.values[k], 0.0);
                acc += base.vectors(i, k) * std::sqrt(g) * std::conj(base.vectors(j, k));
            }
            sqrt_rho(i, j) = acc;
        }

    // The spectrum of rho rho~ equals that of the Hermitian
    // sqrt(rho) rho~ sqrt(rho), which keeps the eigensolve self-adjoint.
    CMatrix m = matmul(matmul(sqrt_rho, spin_flip(rho_two_qubit)), sqrt_rho);
    // symmetrize away rounding
    CMatrix msym(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            msym(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    const EigenDecomposition prod = herm_eig(msym);

    double lambda[4];
    for (std::size_t k = 0; k < 4; ++k)
        lambda[k] = std::sqrt(std::max(prod.values[3 - k], 0.0)); // descending
    return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

MultiQubitState::MultiQubitState(std::size_t n_sites, std::vector<Complex> amplitudes)
    : n_sites_(n_sites), amplitudes_(std::move(amplitudes)) {
    if (n_sites_ < 2 || n_sites_ > 10)
        throw BadDims("MultiQubitState: n_sites must be in 2..10");
    if (amplitudes_.size() != (std::size_t{1} << n_sites_))
        throw ShapeMismatch("MultiQubitState: amplitude count must be 2^n_sites");
    double norm2 = 0.0;
    for (const auto &a : amplitudes_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw NotNormalized("MultiQubitState: non-finite amplitude");
        norm2 += std::norm(a);
    }
    const double norm = std::sqrt(norm2);
    if (std::abs(norm - 1.0) > 1e-9)
        throw NotNormalized("MultiQubitState: norm deviates from 1 by more than 1e-9");
    if (norm != 1.0)
        for (auto &a : amplitudes_) a /= norm;
}

ReducedDensity single_site_density(const MultiQubitState &psi, std::size_t site) {
    if (site >= psi.n_sites()) throw BadSite("single_site_density: site out of range");
    const auto &a = psi.amplitudes();
    const std::size_t low_mask = (std::size_t{1} << site) - 1;
    const std::size_t rest = a.size() >> 1;
    double r00 = 0.0, r11 = 0.0;
    Complex r01 = 0.0;
    for (std::size_t r = 0; r < rest; ++r) {
        const std::size_t base = ((r & ~low_mask) << 1) | (r & low_mask);
        const Complex a0 = a[base];
        const Complex a1 = a[base | (std::size_t{1} << site)];
        r00 += std::norm(a0);
        r11 += std::norm(a1);
        r01 += a0 * std::conj(a1);
    }
    CMatrix rho(2, 2);
    rho(0, 0) = r00;
    rho(1, 1) = r11;
    rho(0, 1) = r01;
    rho(1, 0) = std::conj(r01);
    return ReducedDensity{2, std::move(rho)};
}

CMatrix two_site_density(const MultiQubitState &psi, std::size_t site_a, std::size_t site_b) {
    const std::size_t n = psi.n_sites();
    if (site_a >= n || site_b >= n || site_a == site_b)
        throw BadSite("two_site_density: invalid site pair");
    const auto &a = psi.amplitudes();
    const std::size_t lo = std::min(site_a, site_b), hi = std::max(site_a, site_b);
    const std::size_t lo_mask = (std::size_t{1} << lo) - 1;
    const std::size_t mid_mask = (std::size_t{1} << (hi - 1)) - 1;
    const std::size_t rest = a.size() >> 2;

    CMatrix rho(4, 4);
    for (std::size_t r = 0; r < rest; ++r) {
        // spread the remaining bits around positions lo < hi
        const std::size_t low = r & lo_mask;
        const std::size_t mid = (r & (mid_mask & ~lo_mask)) << 1;
        const std::size_t high = (r & ~mid_mask) << 2;
        const std::size_t base = high | mid | low;
        std::size_t idx[4];
        for (std::size_t pa = 0; pa < 2; ++pa)
            for (std::size_t pb = 0; pb < 2; ++pb)
                idx[pa * 2 + pb] = base | (pa << site_a) | (pb << site_b);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) rho(i, j) += a[idx[i]] * std::conj(a[idx[j]]);
    }
    return rho;
}

MonogamyResult monogamy_check(const MultiQubitState &psi, std::size_t site) {
    if (site >= psi.n_sites()) throw BadSite("monogamy_check: site out of range");
    const double lhs = tangle(single_site_density(psi, site));
    double rhs = 0.0;
    for (std::size_t j = 0; j < psi.n_sites(); ++j) {
        if (j == site) continue;
        const double c = concurrence(two_site_density(psi, site, j));
        rhs += c * c;
    }
    const double slack = lhs - rhs;
    return MonogamyResult{lhs, rhs, slack >= -1e-9, slack};
}

EntanglementReport make_report(const BipartiteState &psi, double tol) {
    EntanglementReport rep;
    rep.dim_a = psi.dim_a();
    rep.dim_b = psi.dim_b();
    const ReducedDensity rd = reduced_density(psi);
    rep.purity = purity(rd);
    rep.linear_entropy = linear_entropy(rd);
    rep.von_neumann = von_neumann(rd);

    const EigenDecomposition eig = herm_eig(rd.rho);
    const double gmin = eig.values.front(), gmax = eig.values.back();
    const double f_hi = (2.0 * gmax - 1.0) * (2.0 * gmax - 1.0);
    const double f_lo = (2.0 * gmin - 1.0) * (2.0 * gmin - 1.0);
    rep.max_factorizability = std::clamp(std::max(f_hi, f_lo), 0.0, 1.0);

    if (psi.dim_a() == 2) {
        rep.tangle = tangle(rd);
        const SquoMinimum opt = optimal_squo(psi);
        rep.min_d2 = opt.min_d2;
        rep.degenerate_minimizer = opt.degenerate;
        rep.qubit_minimizer = opt.params1;
        rep.separable = opt.min_d2 <= tol;
    } else {
        SqutuoMinimum opt = min_squared_distance_qutrit(psi);
        rep.min_d2 = opt.min_d2;
        rep.separable = opt.min_d2 <= tol;
        rep.qutrit_minimizer = std::move(opt.basis);
    }
    return rep;
}

} // namespace entgeo
