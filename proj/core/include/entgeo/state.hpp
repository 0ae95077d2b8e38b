#pragma once

#include <cstdint>
#include <string>

#include "entgeo/complex_matrix.hpp"

namespace entgeo {

/// Pure state of a bipartite (dim_a x D) system. coeffs(s, n) is the
/// amplitude on |s>_A (x) |n>_B, so rows index the small subsystem A and
/// columns the D-dimensional subsystem B. The Frobenius norm of coeffs is
/// one: a deviation up to 1e-9 is renormalized away on construction, a
/// larger one throws NotNormalized.
class BipartiteState {
  public:
    BipartiteState(std::size_t dim_a, std::size_t dim_b, CMatrix coeffs);

    std::size_t dim_a() const { return dim_a_; }
    std::size_t dim_b() const { return dim_b_; }
    const CMatrix &coeffs() const { return coeffs_; }

  private:
    std::size_t dim_a_;
    std::size_t dim_b_;
    CMatrix coeffs_;
};

/// Reduced state of subsystem A: Hermitian, trace one, PSD up to rounding.
struct ReducedDensity {
    std::size_t dim;
    CMatrix rho;
};

/// rho_A = C C^dagger with C the coefficient matrix; (rho_A)_{st} is
/// sum_n c_{n,s} c*_{n,t}.
ReducedDensity reduced_density(const BipartiteState &psi);

/// Validating constructor for densities assembled elsewhere (diagonal
/// spectra, two-site reductions in tests). Checks Hermiticity and unit trace
/// within 1e-12.
ReducedDensity make_density(CMatrix rho);

/// State with amplitudes drawn as independent standard complex Gaussians and
/// normalized, i.e. Haar-distributed on the unit sphere of the product space.
/// Deterministic per seed. Throws BadDims unless dim_a in {2,3}, dim_b >= 2.
BipartiteState haar_random_state(std::size_t dim_a, std::size_t dim_b, std::uint64_t seed);

/// File format: JSON object
///   {"dim_a": int, "dim_b": int, "amplitudes": [[re, im], ...]}
/// with amplitudes row-major over (a-index, b-index) and written with 17
/// significant digits so a decimal re-parse is exact.
void save_state(const BipartiteState &psi, const std::string &path);
BipartiteState load_state(const std::string &path);

} // namespace entgeo
