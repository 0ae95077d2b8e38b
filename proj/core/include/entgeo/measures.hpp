#pragma once

#include <optional>
#include <vector>

#include "entgeo/squo.hpp"
#include "entgeo/squtuo.hpp"
#include "entgeo/state.hpp"

namespace entgeo {

/// Purity mu = Tr(rho^2) in [1/dim, 1].
double purity(const ReducedDensity &rho);

/// S_L = dim/(dim-1) * (1 - Tr(rho^2)), in [0, 1].
double linear_entropy(const ReducedDensity &rho);

/// Tangle tau = 4 Det(rho) of a qubit reduction; equals the linear entropy
/// there. Throws SizeUnsupported unless dim = 2.
double tangle(const ReducedDensity &rho);

/// Von Neumann entropy -sum_k gamma_k log2 gamma_k in bits, with
/// 0 log 0 := 0 and eigenvalues in [-1e-12, 0) clipped to zero.
double von_neumann(const ReducedDensity &rho);

/// Wootters concurrence of a two-qubit density matrix (4x4, Hermitian, PSD,
/// trace one; otherwise InvalidDensity): with rho~ = (sy (x) sy) rho^*
/// (sy (x) sy) and lambda_k the descending square roots of the spectrum of
/// rho rho~, C = max(0, l1 - l2 - l3 - l4).
double concurrence(const CMatrix &rho_two_qubit);

/// Pure state of n qubits, amplitudes indexed little-endian: site 0 is the
/// least significant bit of the basis index.
class MultiQubitState {
  public:
    MultiQubitState(std::size_t n_sites, std::vector<Complex> amplitudes);

    std::size_t n_sites() const { return n_sites_; }
    const std::vector<Complex> &amplitudes() const { return amplitudes_; }

  private:
    std::size_t n_sites_;
    std::vector<Complex> amplitudes_;
};

/// Reduction to one site (partial trace over every other site).
ReducedDensity single_site_density(const MultiQubitState &psi, std::size_t site);

/// Reduction to the ordered pair (site_a, site_b); the pair index is
/// bit(site_a) * 2 + bit(site_b). Throws BadSite on bad or equal sites.
CMatrix two_site_density(const MultiQubitState &psi, std::size_t site_a, std::size_t site_b);

struct MonogamyResult {
    double lhs;  // tangle across site | rest
    double rhs;  // sum of squared pairwise concurrences
    bool satisfied;
    double slack; // lhs - rhs
};

/// Monogamy inequality tau(site|rest) >= sum_j C^2(site, j), satisfied when
/// slack >= -1e-9.
MonogamyResult monogamy_check(const MultiQubitState &psi, std::size_t site);

/// Everything the library knows about one bipartite pure state.
/// min_d2 equals linear_entropy (and tangle, for qubit A); exactly one of
/// the minimizer fields is set depending on dim_a. max_factorizability is
/// the maximum over pure states of the overlap functional
/// (2 Tr(rho_A rho_p) - 1)^2, which for qubit A equals 1 - min_d2.
struct EntanglementReport {
    std::size_t dim_a = 0;
    std::size_t dim_b = 0;
    double purity = 0.0;
    double linear_entropy = 0.0;
    std::optional<double> tangle; // qubit A only
    double von_neumann = 0.0;
    double min_d2 = 0.0;
    double max_factorizability = 0.0;
    bool separable = false;
    bool degenerate_minimizer = false;
    std::optional<QubitUnitaryParams> qubit_minimizer;
    std::optional<QutritBasis> qutrit_minimizer;
};

EntanglementReport make_report(const BipartiteState &psi, double tol = 1e-10);

} // namespace entgeo
