#pragma once

#include <vector>

#include "entgeo/complex_matrix.hpp"

namespace entgeo {

/// The admissible region of (von Neumann entropy E, linear entropy S_L)
/// pairs for qutrit reductions, bounded by three curves of structured
/// spectra (gamma sorted ascending):
///   lower        gamma = (p, p, 1-2p),    p in [0, 1/3]    from (0,0) to (log2 3, 1)
///   upper_left   gamma = (0, q, 1-q),     q in [0, 1/2]    from (0,0) to (1, 3/4)
///   upper_right  gamma = (1-2q, q, q),    q in [1/3, 1/2]  from (log2 3, 1) to (1, 3/4)
/// The upper curves meet at the cusp (1, 3/4), where one eigenvalue vanishes
/// and the other two coincide.
struct BoundaryCurves {
    struct Point {
        double param;
        double e;  // von Neumann entropy, bits
        double sl; // linear entropy
    };
    std::vector<Point> lower;
    std::vector<Point> upper_left;
    std::vector<Point> upper_right;
};

/// n_points per curve, uniformly spaced in the curve parameter, endpoints
/// included. Each point is (E, S_L) of the corresponding diagonal density
/// matrix.
BoundaryCurves generate_curves(std::size_t n_points);

struct RegionResult {
    bool inside;
    double margin; // signed distance to the nearer S_L bound at this E
};

/// Admissible S_L interval at the query E, located by bisecting the
/// monotone curve parametrizations; inside within +-tol. Throws OutOfRange
/// for E outside [0, log2 3] (beyond tol).
RegionResult region_test(double e_bits, double s_l, double tol);

/// S_L bounds at fixed E (the lower curve, and the upper_left/upper_right
/// switch at the cusp E = 1).
double boundary_s_min(double e_bits);
double boundary_s_max(double e_bits);

/// Serialize curves as CSV with header `curve,param,E,SL`, 12 significant
/// digits, curves ordered lower / upper_left / upper_right.
std::string curves_to_csv(const BoundaryCurves &curves);

} // namespace entgeo
