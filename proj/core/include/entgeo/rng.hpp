#pragma once

#include <cstdint>
#include <random>

#include "entgeo/complex_matrix.hpp"

namespace entgeo {

/// Deterministic random source used everywhere a seed appears in the API.
///
/// The generator is std::mt19937_64, whose algorithm is pinned by the C++
/// standard, and all mappings from raw 64-bit words to doubles are spelled
/// out here rather than delegated to distribution objects (whose algorithms
/// are implementation-defined). This makes sampled states and golden files
/// reproduce bit-for-bit across platforms:
///   - uniform doubles take the top 53 bits: (x >> 11) * 2^-53, in [0, 1)
///   - standard normals come from Box-Muller pairs,
///     r = sqrt(-2 ln u1), (r cos(2 pi u2), r sin(2 pi u2)),
///     with u1 shifted into (0, 1]; the second member of each pair is
///     handed out on the next call
///
/// Concurrent sampling derives one stream per task as seed ^ task_index
/// (see derive_seed) instead of sharing generator state.
class GaussianRng {
  public:
    explicit GaussianRng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Standard normal N(0, 1).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53; // (0, 1]
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    /// Complex value with independent standard-normal real and imaginary parts.
    Complex complex_normal() {
        const double re = normal();
        const double im = normal();
        return {re, im};
    }

  private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Per-task seed for embarrassingly parallel sampling loops.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t task_index) {
    return seed ^ task_index;
}

} // namespace entgeo
