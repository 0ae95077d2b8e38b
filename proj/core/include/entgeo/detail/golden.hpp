#pragma once

#include <utility>

namespace entgeo::detail {

// Golden-section minimization on [lo, hi]; derivative-free and fully
// deterministic. Returns (argmin, min) over all evaluated points.
template <typename F>
std::pair<double, double> golden_min(F &&f, double lo, double hi, int iters) {
    constexpr double inv_phi = 0.6180339887498949; // (sqrt(5)-1)/2
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    return (f1 <= f2) ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

} // namespace entgeo::detail
