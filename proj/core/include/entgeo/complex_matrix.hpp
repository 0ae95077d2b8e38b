#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "entgeo/errors.hpp"

namespace entgeo {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Everything in this project is small
/// (3x3 for the entanglement measures, up to 1024x1024 for the spin-chain
/// demo), so no attempt is made at blocking or sparsity.
class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}

    static CMatrix identity(std::size_t n);
    static CMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_ && rows_ > 0; }

    Complex &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Complex> &data() { return data_; }
    const std::vector<Complex> &data() const { return data_; }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// Matrix product. Throws ShapeMismatch on incompatible shapes.
CMatrix matmul(const CMatrix &a, const CMatrix &b);

/// Conjugate transpose.
CMatrix adjoint(const CMatrix &a);

/// Trace of a square matrix. Throws ShapeMismatch otherwise.
Complex trace(const CMatrix &a);

/// Determinant by cofactor expansion, sizes 2 and 3 only.
/// Throws SizeUnsupported for anything else.
Complex det(const CMatrix &a);

/// y = A x. Throws ShapeMismatch if x.size() != A.cols().
std::vector<Complex> apply(const CMatrix &a, const std::vector<Complex> &x);

CMatrix operator+(const CMatrix &a, const CMatrix &b);
CMatrix operator-(const CMatrix &a, const CMatrix &b);
CMatrix operator*(Complex s, const CMatrix &a);

double max_abs(const CMatrix &a);
double frobenius_norm(const CMatrix &a);

/// Largest entry of |A - A^dagger|.
double hermiticity_defect(const CMatrix &a);

/// True when every entry is finite.
bool all_finite(const CMatrix &a);

} // namespace entgeo
