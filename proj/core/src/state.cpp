#include "entgeo/state.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "entgeo/rng.hpp"

namespace entgeo {

BipartiteState::BipartiteState(std::size_t dim_a, std::size_t dim_b, CMatrix coeffs)
    : dim_a_(dim_a), dim_b_(dim_b), coeffs_(std::move(coeffs)) {
    if (dim_a_ != 2 && dim_a_ != 3) throw BadDims("BipartiteState: dim_a must be 2 or 3");
    if (dim_b_ < 2) throw BadDims("BipartiteState: dim_b must be >= 2");
    if (coeffs_.rows() != dim_a_ || coeffs_.cols() != dim_b_)
        throw ShapeMismatch("BipartiteState: coefficient matrix shape does not match dims");
    if (!all_finite(coeffs_)) throw NotNormalized("BipartiteState: non-finite amplitude");
    const double norm = frobenius_norm(coeffs_);
    if (std::abs(norm - 1.0) > 1e-9)
        throw NotNormalized("BipartiteState: norm deviates from 1 by more than 1e-9");
    if (norm != 1.0) {
        const double inv = 1.0 / norm;
        for (auto &v : coeffs_.data()) v *= inv;
    }
}

ReducedDensity reduced_density(const BipartiteState &psi) {
    const CMatrix &c = psi.coeffs();
    const double norm = frobenius_norm(c);
    if (std::abs(norm - 1.0) > 1e-9)
        throw NotNormalized("reduced_density: state norm deviates beyond 1e-9");
    const std::size_t da = psi.dim_a(), db = psi.dim_b();
    CMatrix rho(da, da);
    for (std::size_t s = 0; s < da; ++s) {
        double diag = 0.0;
        for (std::size_t n = 0; n < db; ++n) diag += std::norm(c(s, n));
        rho(s, s) = diag;
        for (std::size_t t = s + 1; t < da; ++t) {
            Complex acc = 0.0;
            for (std::size_t n = 0; n < db; ++n) acc += c(s, n) * std::conj(c(t, n));
            rho(s, t) = acc;
            rho(t, s) = std::conj(acc);
        }
    }
    return ReducedDensity{da, std::move(rho)};
}

ReducedDensity make_density(CMatrix rho) {
    if (!rho.square()) throw InvalidDensity("make_density: matrix not square");
    if (!all_finite(rho)) throw InvalidDensity("make_density: non-finite entry");
    if (hermiticity_defect(rho) > 1e-12)
        throw InvalidDensity("make_density: not Hermitian within 1e-12");
    if (std::abs(trace(rho) - Complex(1.0, 0.0)) > 1e-12)
        throw InvalidDensity("make_density: trace deviates from 1 beyond 1e-12");
    return ReducedDensity{rho.rows(), std::move(rho)};
}

BipartiteState haar_random_state(std::size_t dim_a, std::size_t dim_b, std::uint64_t seed) {
    if (dim_a != 2 && dim_a != 3) throw BadDims("haar_random_state: dim_a must be 2 or 3");
    if (dim_b < 2) throw BadDims("haar_random_state: dim_b must be >= 2");
    GaussianRng rng(seed);
    CMatrix c(dim_a, dim_b);
    for (auto &v : c.data()) v = rng.complex_normal();
    const double inv = 1.0 / frobenius_norm(c);
    for (auto &v : c.data()) v *= inv;
    return BipartiteState(dim_a, dim_b, std::move(c));
}

void save_state(const BipartiteState &psi, const std::string &path) {
    std::ofstream out(path);
    if (!out) throw ParseError("save_state: cannot open '" + path + "' for writing");
    char buf[64];
    out << "{\n  \"dim_a\": " << psi.dim_a() << ",\n  \"dim_b\": " << psi.dim_b()
        << ",\n  \"amplitudes\": [\n";
    const auto &data = psi.coeffs().data();
    for (std::size_t i = 0; i < data.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "    [%.17g, %.17g]", data[i].real(), data[i].imag());
        out << buf << (i + 1 < data.size() ? ",\n" : "\n");
    }
    out << "  ]\n}\n";
    if (!out) throw ParseError("save_state: write to '" + path + "' failed");
}

BipartiteState load_state(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ParseError("load_state: cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("load_state: malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dim_a") || !j.contains("dim_b") || !j.contains("amplitudes"))
        throw ParseError("load_state: missing dim_a/dim_b/amplitudes");
    if (!j["dim_a"].is_number_integer() || !j["dim_b"].is_number_integer() ||
        !j["amplitudes"].is_array())
        throw ParseError("load_state: wrong field types");

    const auto dim_a = j["dim_a"].get<std::int64_t>();
    const auto dim_b = j["dim_b"].get<std::int64_t>();
    if (dim_a < 2 || dim_b < 2) throw BadDims("load_state: dims out of range");
    const auto &amps = j["amplitudes"];
    if (amps.size() != static_cast<std::size_t>(dim_a * dim_b))
        throw ParseError("load_state: amplitude count does not match dim_a*dim_b");

    CMatrix c(static_cast<std::size_t>(dim_a), static_cast<std::size_t>(dim_b));
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const auto &pair = amps[i];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
            throw ParseError("load_state: amplitude entries must be [re, im]");
        const double re = pair[0].get<double>();
        const double im = pair[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im))
            throw ParseError("load_state: non-finite amplitude");
        c.data()[i] = Complex(re, im);
    }
    return BipartiteState(static_cast<std::size_t>(dim_a), static_cast<std::size_t>(dim_b),
                          std::move(c));
}

} // namespace entgeo
