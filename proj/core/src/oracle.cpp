#include "entgeo/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "entgeo/detail/golden.hpp"
#include "entgeo/rng.hpp"

namespace entgeo {

namespace {
constexpr double kPi = 3.14159265358979323846;
} // namespace

GridMinimum grid_min_squo(const BipartiteState &psi, std::size_t n_theta, std::size_t n_phi) {
    if (psi.dim_a() != 2) throw DimMismatch("grid_min_squo: state is not (2 x D)");
    if (n_theta < 2 || n_phi < 2)
        throw std::invalid_argument("grid_min_squo: need at least 2 points per angle");

    const BlochVector m = bloch_expectations(psi);
    const auto d2 = [&m](double theta, double phi) {
        const double st = std::sin(theta);
        const double ov =
            m.mz * std::cos(theta) + m.mx * st * std::cos(phi) + m.my * st * std::sin(phi);
        return 1.0 - ov * ov;
    };

    const double dtheta = kPi / static_cast<double>(n_theta - 1);
    const double dphi = 2.0 * kPi / static_cast<double>(n_phi);

    double best = 2.0, best_theta = 0.0, best_phi = 0.0;
    for (std::size_t i = 0; i < n_theta; ++i) {
        const double theta = static_cast<double>(i) * dtheta;
        for (std::size_t j = 0; j < n_phi; ++j) {
            const double phi = static_cast<double>(j) * dphi;
            const double v = d2(theta, phi);
            if (v < best) {
                best = v;
                best_theta = theta;
                best_phi = phi;
            }
        }
    }

    // Coordinate descent around the grid argmin. Angles are left unwrapped
    // during refinement (the objective is smooth and periodic); the final
    // pair is canonicalized by the params constructor.
    double half_t = dtheta, half_p = dphi;
    for (int round = 0; round < 20; ++round) {
        auto [t, ft] = detail::golden_min([&](double x) { return d2(x, best_phi); },
                                          best_theta - half_t, best_theta + half_t, 20);
        if (ft < best) {
            best = ft;
            best_theta = t;
        }
        auto [p, fp] = detail::golden_min([&](double x) { return d2(best_theta, x); },
                                          best_phi - half_p, best_phi + half_p, 20);
        if (fp < best) {
            best = fp;
            best_phi = p;
        }
        half_t *= 0.5;
        half_p *= 0.5;
    }
    return GridMinimum{std::clamp(best, 0.0, 1.0), QubitUnitaryParams(best_theta, best_phi)};
}

CMatrix haar_unitary(std::size_t dim, std::uint64_t seed) {
    if (dim != 2 && dim != 3) throw BadDims("haar_unitary: dim must be 2 or 3");
    GaussianRng rng(seed);
    CMatrix g(dim, dim);
    for (auto &v : g.data()) v = rng.complex_normal();

    // Modified Gram-Schmidt with one re-orthogonalization pass. Column norms
    // are the (positive real) R diagonal, so Q needs no extra phase fix.
    CMatrix q(dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
        std::vector<Complex> v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = g(i, k);
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < k; ++j) {
                Complex proj = 0.0;
                for (std::size_t i = 0; i < dim; ++i) proj += std::conj(q(i, j)) * v[i];
                for (std::size_t i = 0; i < dim; ++i) v[i] -= proj * q(i, j);
            }
        }
        double nrm = 0.0;
        for (const auto &x : v) nrm += std::norm(x);
        nrm = std::sqrt(nrm);
        for (std::size_t i = 0; i < dim; ++i) q(i, k) = v[i] / nrm;
    }
    return q;
}

FrameMinimum random_basis_min_squtuo(const BipartiteState &psi, std::size_t samples,
                                     std::uint64_t seed) {
    if (psi.dim_a() != 3) throw DimMismatch("random_basis_min_squtuo: state is not (3 x D)");
    if (samples == 0) throw std::invalid_argument("random_basis_min_squtuo: samples must be > 0");

    const ReducedDensity rd = reduced_density(psi);
    double best = 2.0;
    CMatrix best_frame;
    for (std::size_t k = 0; k < samples; ++k) {
        const CMatrix v = haar_unitary(3, derive_seed(seed, k));
        double sum_sq = 0.0;
        for (std::size_t c = 0; c < 3; ++c) {
            Complex acc = 0.0;
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j)
                    acc += std::conj(v(i, c)) * rd.rho(i, j) * v(j, c);
            sum_sq += acc.real() * acc.real();
        }
        const double d2 = 1.5 * (1.0 - sum_sq);
        if (d2 < best) {
            best = d2;
            best_frame = v;
        }
    }
    return FrameMinimum{std::clamp(best, 0.0, 1.0), QutritBasis(std::move(best_frame))};
}

double basis_scan_qubit(const BipartiteState &psi, std::size_t samples, std::uint64_t seed) {
    if (psi.dim_a() != 2) throw DimMismatch("basis_scan_qubit: state is not (2 x D)");
    if (samples == 0) throw std::invalid_argument("basis_scan_qubit: samples must be > 0");

    const ReducedDensity rd = reduced_density(psi);
    double best = 2.0;
    for (std::size_t k = 0; k < samples; ++k) {
        const CMatrix v = haar_unitary(2, derive_seed(seed, k));
        double diag[2];
        for (std::size_t c = 0; c < 2; ++c) {
            Complex acc = 0.0;
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    acc += std::conj(v(i, c)) * rd.rho(i, j) * v(j, c);
            diag[c] = acc.real();
        }
        best = std::min(best, 4.0 * diag[0] * diag[1]);
    }
    return best;
}

} // namespace entgeo
