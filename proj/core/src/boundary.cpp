#include "entgeo/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace entgeo {

namespace {

const double kLog2_3 = std::log2(3.0);

double entropy_term(double g) { return g > 0.0 ? -g * std::log2(g) : 0.0; }

// (E, S_L) of a diagonal qutrit density matrix with the given spectrum.
std::pair<double, double> spectrum_point(double g1, double g2, double g3) {
    const double e = entropy_term(g1) + entropy_term(g2) + entropy_term(g3);
    const double sl = 1.5 * (1.0 - (g1 * g1 + g2 * g2 + g3 * g3));
    return {e, sl};
}

std::pair<double, double> lower_point(double p) { return spectrum_point(p, p, 1.0 - 2.0 * p); }
std::pair<double, double> upper_left_point(double q) { return spectrum_point(0.0, q, 1.0 - q); }
std::pair<double, double> upper_right_point(double q) {
    return spectrum_point(1.0 - 2.0 * q, q, q);
}

// Bisection for the parameter at which a monotone curve reaches entropy e.
template <typename Curve>
double match_entropy(Curve &&curve, double lo, double hi, double e, bool increasing) {
    for (int it = 0; it < 100 && hi - lo > 1e-14; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double em = curve(mid).first;
        if ((em < e) == increasing) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

BoundaryCurves generate_curves(std::size_t n_points) {
    if (n_points < 2) throw std::invalid_argument("generate_curves: need at least 2 points");
    BoundaryCurves out;
    const double denom = static_cast<double>(n_points - 1);
    for (std::size_t i = 0; i < n_points; ++i) {
        const double f = static_cast<double>(i) / denom;
        const double p = f / 3.0;
        const auto [e_lo, sl_lo] = lower_point(p);
        out.lower.push_back({p, e_lo, sl_lo});
        const double ql = f / 2.0;
        const auto [e_ul, sl_ul] = upper_left_point(ql);
        out.upper_left.push_back({ql, e_ul, sl_ul});
        const double qr = 1.0 / 3.0 + f / 6.0;
        const auto [e_ur, sl_ur] = upper_right_point(qr);
        out.upper_right.push_back({qr, e_ur, sl_ur});
    }
    return out;
}

double boundary_s_min(double e_bits) {
    const double e = std::clamp(e_bits, 0.0, kLog2_3);
    if (e == 0.0) return 0.0;
    if (e >= kLog2_3) return 1.0;
    // lower curve: E increases with p on [0, 1/3]
    const double p = match_entropy(lower_point, 0.0, 1.0 / 3.0, e, true);
    return lower_point(p).second;
}

double boundary_s_max(double e_bits) {
    const double e = std::clamp(e_bits, 0.0, kLog2_3);
    if (e == 0.0) return 0.0;
    if (e >= kLog2_3) return 1.0;
    if (e <= 1.0) {
        // upper_left: E is the binary entropy of q, increasing on [0, 1/2]
        const double q = match_entropy(upper_left_point, 0.0, 0.5, e, true);
        return upper_left_point(q).second;
    }
    // upper_right: E decreases from log2 3 to 1 as q runs from 1/3 to 1/2
    const double q = match_entropy(upper_right_point, 1.0 / 3.0, 0.5, e, false);
    return upper_right_point(q).second;
}

RegionResult region_test(double e_bits, double s_l, double tol) {
    if (e_bits < -tol || e_bits > kLog2_3 + tol)
        throw OutOfRange("region_test: E outside [0, log2 3]");
    const double s_min = boundary_s_min(e_bits);
    const double s_max = boundary_s_max(e_bits);
    const double margin = std::min(s_l - s_min, s_max - s_l);
    const bool inside = (s_l >= s_min - tol) && (s_l <= s_max + tol);
    return RegionResult{inside, margin};
}

std::string curves_to_csv(const BoundaryCurves &curves) {
    std::string out = "curve,param,E,SL\n";
    char buf[128];
    const auto emit = [&](const char *name, const std::vector<BoundaryCurves::Point> &pts) {
        for (const auto &p : pts) {
            std::snprintf(buf, sizeof(buf), "%s,%.12g,%.12g,%.12g\n", name, p.param, p.e, p.sl);
            out += buf;
        }
    };
    emit("lower", curves.lower);
    emit("upper_left", curves.upper_left);
    emit("upper_right", curves.upper_right);
    return out;
}

} // namespace entgeo
