#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace polarmod {

using Complex = std::complex<double>;

// Dense complex matrix, row-major.  This is the numerical kernel the matrix
// backend reduces everything to; it stays deliberately small.
class CMat {
public:
    CMat() : rows_(0), cols_(0) {}
    CMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}

    static CMat identity(std::size_t n);
    static CMat diag(const std::vector<double>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    CMat operator+(const CMat& o) const;
    CMat operator-(const CMat& o) const;
    CMat operator*(const CMat& o) const;
    CMat operator*(Complex z) const;
    CMat operator-() const;

    CMat adjoint() const;
    CMat transpose() const;
    CMat conj() const;

    double frobenius() const;
    double max_abs() const;
    bool all_finite() const;

    // Spectral (operator) 2-norm, largest singular value.
    double norm2() const;

private:
    std::size_t rows_, cols_;
    std::vector<Complex> data_;
};

// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
// Eigenvalues ascending; columns of `vectors` are the matching eigenvectors,
// so  h = vectors * diag(values) * vectors^H  up to the stated residual.
struct HermEig {
    std::vector<double> values;
    CMat vectors;
};

// Requires h Hermitian (caller checks).  Sweeps until the off-diagonal
// Frobenius norm drops below 1e-12 * (1 + ||h||_F).
HermEig eig_hermitian(const CMat& h);

// Compact SVD, b = u * diag(sigma) * v^H with sigma descending and only
// singular values above rank_tol * (1 + sigma_max) retained.
struct Svd {
    CMat u;                     // rows(b) x r
    std::vector<double> sigma;  // r, descending, all > 0
    CMat v;                     // cols(b) x r
};

Svd svd_compact(const CMat& b, double rank_tol);

// Moore-Penrose pseudoinverse via the compact SVD.
CMat pinv(const CMat& b, double rank_tol);

}  // namespace polarmod
