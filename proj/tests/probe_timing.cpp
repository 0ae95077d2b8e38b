// Scratch timing probe for the Jacobi eigensolver (removed once measured).
#include <chrono>
#include <cstdio>
#include <random>

#include "entgeo/eig.hpp"

using namespace entgeo;

static CMatrix random_hermitian(std::size_t n, bool complex_entries, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = u(eng);
        for (std::size_t j = i + 1; j < n; ++j) {
            Complex v = complex_entries ? Complex(u(eng), u(eng)) : Complex(u(eng), 0.0);
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    return h;
}

int main() {
    for (bool cplx : {false, true}) {
        for (std::size_t n : {64u, 128u, 256u}) {
            CMatrix h = random_hermitian(n, cplx, 42 + n);
            auto t0 = std::chrono::steady_clock::now();
            auto eig = herm_eig(h);
            auto t1 = std::chrono::steady_clock::now();
            double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            // residual check: || H v0 - l0 v0 ||
            std::vector<Complex> v0(n);
            for (std::size_t i = 0; i < n; ++i) v0[i] = eig.vectors(i, 0);
            auto hv = apply(h, v0);
            double res = 0.0;
            for (std::size_t i = 0; i < n; ++i) res += std::norm(hv[i] - eig.values[0] * v0[i]);
            std::printf("%s n=%3zu  %8.2f ms   lambda0=%+.6f  residual=%.3e\n",
                        cplx ? "cplx" : "real", n, ms, eig.values[0], std::sqrt(res));
        }
    }
    return 0;
}
