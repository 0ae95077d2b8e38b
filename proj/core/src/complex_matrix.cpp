#include "entgeo/complex_matrix.hpp"

#include <cmath>

namespace entgeo {

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    CMatrix m(r, c);
    std::size_t i = 0;
    for (const auto &row : rows) {
        if (row.size() != c) throw ShapeMismatch("from_rows: ragged row lengths");
        std::size_t j = 0;
        for (const auto &v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

CMatrix matmul(const CMatrix &a, const CMatrix &b) {
    if (a.cols() != b.rows()) throw ShapeMismatch("matmul: inner dimensions differ");
    CMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

CMatrix adjoint(const CMatrix &a) {
    CMatrix r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
    return r;
}

Complex trace(const CMatrix &a) {
    if (!a.square()) throw ShapeMismatch("trace: matrix not square");
    Complex t = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

Complex det(const CMatrix &a) {
    if (!a.square()) throw ShapeMismatch("det: matrix not square");
    if (a.rows() == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    if (a.rows() == 3)
        return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
               a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
               a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
    throw SizeUnsupported("det: only sizes 2 and 3 are supported");
}

std::vector<Complex> apply(const CMatrix &a, const std::vector<Complex> &x) {
    if (x.size() != a.cols()) throw ShapeMismatch("apply: vector length != cols");
    std::vector<Complex> y(a.rows(), Complex(0.0, 0.0));
    const Complex *row = a.data().data();
    for (std::size_t i = 0; i < a.rows(); ++i, row += a.cols()) {
        Complex acc = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
    return y;
}

CMatrix operator+(const CMatrix &a, const CMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("operator+: shapes differ");
    CMatrix c = a;
    for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] += b.data()[i];
    return c;
}

CMatrix operator-(const CMatrix &a, const CMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("operator-: shapes differ");
    CMatrix c = a;
    for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] -= b.data()[i];
    return c;
}

CMatrix operator*(Complex s, const CMatrix &a) {
    CMatrix c = a;
    for (auto &v : c.data()) v *= s;
    return c;
}

double max_abs(const CMatrix &a) {
    double m = 0.0;
    for (const auto &v : a.data()) m = std::max(m, std::abs(v));
    return m;
}

double frobenius_norm(const CMatrix &a) {
    double s = 0.0;
    for (const auto &v : a.data()) s += std::norm(v);
    return std::sqrt(s);
}

double hermiticity_defect(const CMatrix &a) {
    if (!a.square()) throw ShapeMismatch("hermiticity_defect: matrix not square");
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i; j < a.cols(); ++j)
            m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
    return m;
}

bool all_finite(const CMatrix &a) {
    for (const auto &v : a.data())
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

} // namespace entgeo
