#include "entgeo/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <type_traits>

namespace entgeo {

namespace {

template <typename Scalar> double abs2(Scalar v) {
    if constexpr (std::is_same_v<Scalar, double>) return v * v;
    else return std::norm(v);
}

template <typename Scalar> Scalar conjugate(Scalar v) {
    if constexpr (std::is_same_v<Scalar, double>) return v;
    else return std::conj(v);
}

template <typename Scalar> double real_part(Scalar v) {
    if constexpr (std::is_same_v<Scalar, double>) return v;
    else return v.real();
}

// One cyclic Jacobi sweep over all (p,q) pairs of the n x n Hermitian matrix
// `a` (row-major, modified in place), accumulating rotations into `v`.
// The (p,q) plane rotation is J = [[c, s], [-conj(s), c]] with c real,
// s = t*c*u, u = a_pq/|a_pq|, and t the smaller-magnitude root of
// t^2 - 2*theta*t - 1 = 0, theta = (a_pp - a_qq) / (2|a_pq|), which
// annihilates a_pq in A <- J^dagger A J.
template <typename Scalar>
void jacobi_sweep(std::vector<Scalar> &a, std::vector<Scalar> &v, std::size_t n) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            const Scalar apq = a[p * n + q];
            const double mag = std::sqrt(abs2(apq));
            if (mag == 0.0) continue;

            const double app = real_part(a[p * n + p]);
            const double aqq = real_part(a[q * n + q]);
            const double theta = (app - aqq) / (2.0 * mag);
            const double root = std::hypot(theta, 1.0);
            const double t = (theta >= 0.0) ? -1.0 / (theta + root) : 1.0 / (-theta + root);
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const Scalar s = apq * Scalar(t * c / mag);
            const Scalar sc = conjugate(s);

            // Rows p and q: A <- J^dagger A.
            Scalar *rp = a.data() + p * n;
            Scalar *rq = a.data() + q * n;
            for (std::size_t r = 0; r < n; ++r) {
                const Scalar x = rp[r], y = rq[r];
                rp[r] = Scalar(c) * x - s * y;
                rq[r] = sc * x + Scalar(c) * y;
            }
            // Columns p and q: A <- A J; accumulate V <- V J.
            for (std::size_t r = 0; r < n; ++r) {
                Scalar *row = a.data() + r * n;
                const Scalar x = row[p], y = row[q];
                row[p] = Scalar(c) * x - sc * y;
                row[q] = s * x + Scalar(c) * y;
            }
            for (std::size_t r = 0; r < n; ++r) {
                Scalar *row = v.data() + r * n;
                const Scalar x = row[p], y = row[q];
                row[p] = Scalar(c) * x - sc * y;
                row[q] = s * x + Scalar(c) * y;
            }
            // The rotation annihilates a_pq analytically; enforce it and keep
            // the diagonal real so rounding cannot reintroduce drift.
            a[p * n + q] = Scalar(0.0);
            a[q * n + p] = Scalar(0.0);
            a[p * n + p] = Scalar(real_part(a[p * n + p]));
            a[q * n + q] = Scalar(real_part(a[q * n + q]));
        }
    }
}

template <typename Scalar> double off_diagonal_norm(const std::vector<Scalar> &a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * abs2(a[i * n + j]);
    return std::sqrt(s);
}

// Runs sweeps to convergence and returns (diagonal, accumulated rotations).
template <typename Scalar>
std::pair<std::vector<double>, std::vector<Scalar>> run_jacobi(std::vector<Scalar> a, std::size_t n,
                                                               double norm_h) {
    std::vector<Scalar> v(n * n, Scalar(0.0));
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = Scalar(1.0);
    const double target = 1e-14 * norm_h;
    bool converged = false;
    for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
        if (off_diagonal_norm(a, n) <= target) converged = true;
        else jacobi_sweep(a, v, n);
    }
    if (!converged && off_diagonal_norm(a, n) > target)
        throw NoConvergence("herm_eig: Jacobi iteration did not converge in 100 sweeps");
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = real_part(a[i * n + i]);
    return {std::move(diag), std::move(v)};
}

// Phase-fix a unit column so its first component of nonnegligible magnitude
// is real and positive.
void fix_phase(CMatrix &vecs, std::size_t col) {
    const std::size_t n = vecs.rows();
    for (std::size_t i = 0; i < n; ++i) {
        const Complex vi = vecs(i, col);
        if (std::abs(vi) > 1e-12) {
            const Complex phase = std::conj(vi) / std::abs(vi);
            if (phase != Complex(1.0, 0.0))
                for (std::size_t r = 0; r < n; ++r) vecs(r, col) *= phase;
            return;
        }
    }
}

bool column_less(const CMatrix &vecs, std::size_t ca, std::size_t cb) {
    for (std::size_t i = 0; i < vecs.rows(); ++i) {
        const Complex a = vecs(i, ca), b = vecs(i, cb);
        if (a.real() != b.real()) return a.real() < b.real();
        if (a.imag() != b.imag()) return a.imag() < b.imag();
    }
    return false;
}

// Ascending eigenvalue order, phase-fixed columns, and a lexicographic
// column order inside exactly degenerate clusters.
EigenDecomposition finalize(std::vector<double> values, CMatrix vectors) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return values[x] < values[y]; });

    EigenDecomposition out;
    out.values.resize(n);
    out.vectors = CMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = values[order[k]];
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = vectors(r, order[k]);
    }
    for (std::size_t k = 0; k < n; ++k) fix_phase(out.vectors, k);

    double vmax = 0.0;
    for (double v : out.values) vmax = std::max(vmax, std::abs(v));
    const double cluster_tol = 1e-12 * std::max(1.0, vmax);
    for (std::size_t k = 0; k + 1 < n;) {
        std::size_t e = k + 1;
        while (e < n && out.values[e] - out.values[k] <= cluster_tol) ++e;
        if (e - k > 1) {
            std::vector<std::size_t> cols(e - k);
            std::iota(cols.begin(), cols.end(), k);
            std::stable_sort(cols.begin(), cols.end(), [&](std::size_t x, std::size_t y) {
                return column_less(out.vectors, x, y);
            });
            std::vector<double> vals(e - k);
            CMatrix tmp(n, e - k);
            for (std::size_t c = 0; c < cols.size(); ++c) {
                vals[c] = out.values[cols[c]];
                for (std::size_t r = 0; r < n; ++r) tmp(r, c) = out.vectors(r, cols[c]);
            }
            for (std::size_t c = 0; c < cols.size(); ++c) {
                out.values[k + c] = vals[c];
                for (std::size_t r = 0; r < n; ++r) out.vectors(r, k + c) = tmp(r, c);
            }
        }
        k = e;
    }
    return out;
}

} // namespace

EigenDecomposition herm_eig(const CMatrix &h) {
    if (!h.square()) throw ShapeMismatch("herm_eig: matrix not square");
    const std::size_t n = h.rows();
    const double scale = max_abs(h);
    if (hermiticity_defect(h) > 1e-12 * std::max(1.0, scale))
        throw NonHermitian("herm_eig: matrix is not Hermitian within 1e-12");

    const double norm_h = frobenius_norm(h);
    if (norm_h == 0.0) {
        EigenDecomposition out;
        out.values.assign(n, 0.0);
        out.vectors = CMatrix::identity(n);
        return out;
    }

    bool real_input = true;
    for (const auto &z : h.data())
        if (z.imag() != 0.0) { real_input = false; break; }

    std::vector<double> values;
    CMatrix vectors(n, n);
    if (real_input) {
        std::vector<double> a(n * n);
        for (std::size_t i = 0; i < n * n; ++i) a[i] = h.data()[i].real();
        auto [diag, v] = run_jacobi(std::move(a), n, norm_h);
        values = std::move(diag);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) vectors(i, j) = v[i * n + j];
    } else {
        auto [diag, v] = run_jacobi(std::vector<Complex>(h.data()), n, norm_h);
        values = std::move(diag);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) vectors(i, j) = v[i * n + j];
    }
    return finalize(std::move(values), std::move(vectors));
}

} // namespace entgeo
