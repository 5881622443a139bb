#include "polarmod/complexmat.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

#include "polarmod/errors.hpp"

namespace polarmod {

CMat CMat::identity(std::size_t n) {
    CMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMat CMat::diag(const std::vector<double>& d) {
    CMat m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

CMat CMat::operator+(const CMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ShapeMismatch("matrix addition shape mismatch");
    CMat r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

CMat CMat::operator-(const CMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ShapeMismatch("matrix subtraction shape mismatch");
    CMat r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
}

CMat CMat::operator*(const CMat& o) const {
    if (cols_ != o.rows_) throw ShapeMismatch("matrix product shape mismatch");
    CMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Complex a = (*this)(i, k);
            if (a == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
        }
    }
    return r;
}

CMat CMat::operator*(Complex z) const {
    CMat r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * z;
    return r;
}

CMat CMat::operator-() const { return (*this) * Complex(-1.0, 0.0); }

CMat CMat::adjoint() const {
    CMat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

CMat CMat::transpose() const {
    CMat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

CMat CMat::conj() const {
    CMat r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = std::conj(data_[i]);
    return r;
}

double CMat::frobenius() const {
    double s = 0.0;
    for (const Complex& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

double CMat::max_abs() const {
    double m = 0.0;
    for (const Complex& z : data_) m = std::max(m, std::abs(z));
    return m;
}

bool CMat::all_finite() const {
    for (const Complex& z : data_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

double CMat::norm2() const {
    if (rows_ == 0 || cols_ == 0) return 0.0;
    // Largest eigenvalue of the smaller Gram matrix.
    const CMat g = (rows_ <= cols_) ? (*this) * adjoint() : adjoint() * (*this);
    HermEig e = eig_hermitian(g);
    double lam = e.values.empty() ? 0.0 : e.values.back();
    return std::sqrt(std::max(lam, 0.0));
}

namespace {

double offdiag_frobenius(const CMat& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

HermEig eig_hermitian(const CMat& h) {
    assert(h.rows() == h.cols());
    const std::size_t n = h.rows();
    CMat a = h;
    CMat v = CMat::identity(n);
    if (n <= 1) {
        HermEig out;
        out.vectors = v;
        if (n == 1) out.values.push_back(a(0, 0).real());
        return out;
    }

    const double stop = 1e-12 * (1.0 + h.frobenius());
    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (offdiag_frobenius(a) <= stop) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= 1e-300) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                // Zero a(p,q) with the unitary
                //   U = [[c, -s e^{i phi}], [s e^{-i phi}, c]],  phi = arg(apq).
                // Smaller-magnitude root of t^2 - 2 tau t - 1 = 0.
                const double tau = (aqq - app) / (2.0 * mag);
                double t;
                if (tau >= 0.0)
                    t = -1.0 / (tau + std::sqrt(1.0 + tau * tau));
                else
                    t = 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex phase = apq / mag;
                const Complex sp = s * phase;        // s e^{i phi}
                const Complex spc = std::conj(sp);   // s e^{-i phi}

                // A <- U^H A U, applied as row then column updates.
                for (std::size_t j = 0; j < n; ++j) {
                    const Complex rp = a(p, j);
                    const Complex rq = a(q, j);
                    a(p, j) = c * rp + sp * rq;
                    a(q, j) = -spc * rp + c * rq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex cp = a(i, p);
                    const Complex cq = a(i, q);
                    a(i, p) = c * cp + spc * cq;
                    a(i, q) = -sp * cp + c * cq;
                    const Complex vp = v(i, p);
                    const Complex vq = v(i, q);
                    v(i, p) = c * vp + spc * vq;
                    v(i, q) = -sp * vp + c * vq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = Complex(a(p, p).real(), 0.0);
                a(q, q) = Complex(a(q, q).real(), 0.0);
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    HermEig out;
    out.values.resize(n);
    out.vectors = CMat(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = a(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

Svd svd_compact(const CMat& b, double rank_tol) {
    Svd out;
    if (b.rows() == 0 || b.cols() == 0) {
        out.u = CMat(b.rows(), 0);
        out.v = CMat(b.cols(), 0);
        return out;
    }
    const CMat gram = b.adjoint() * b;  // cols x cols, PSD
    HermEig e = eig_hermitian(gram);
    const std::size_t m = b.cols();

    // sigma taken as ||B v|| rather than sqrt(lambda): for a true null
    // vector this is machine-epsilon small, while sqrt of the eigenvalue
    // noise floor would inflate it to ~sqrt(eps) and defeat the rank cut.
    std::vector<double> sig(m, 0.0);
    std::vector<CMat> ucols(m);
    for (std::size_t j = 0; j < m; ++j) {
        CMat vcol(b.cols(), 1);
        for (std::size_t i = 0; i < b.cols(); ++i) vcol(i, 0) = e.vectors(i, j);
        ucols[j] = b * vcol;
        double s2 = 0.0;
        for (std::size_t i = 0; i < b.rows(); ++i) s2 += std::norm(ucols[j](i, 0));
        sig[j] = std::sqrt(s2);
    }
    const double smax = *std::max_element(sig.begin(), sig.end());
    const double cut = rank_tol * (1.0 + smax);

    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < m; ++j)
        if (sig[j] > cut) keep.push_back(j);
    // Descending singular values.
    std::sort(keep.begin(), keep.end(),
              [&](std::size_t a, std::size_t c) { return sig[a] > sig[c]; });

    const std::size_t r = keep.size();
    out.u = CMat(b.rows(), r);
    out.v = CMat(b.cols(), r);
    out.sigma.resize(r);
    for (std::size_t jj = 0; jj < r; ++jj) {
        const std::size_t j = keep[jj];
        out.sigma[jj] = sig[j];
        for (std::size_t i = 0; i < b.cols(); ++i) out.v(i, jj) = e.vectors(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i) out.u(i, jj) = ucols[j](i, 0) / sig[j];
    }
    return out;
}

CMat pinv(const CMat& b, double rank_tol) {
    const Svd s = svd_compact(b, rank_tol);
    CMat r(b.cols(), b.rows());
    for (std::size_t k = 0; k < s.sigma.size(); ++k) {
        const double inv = 1.0 / s.sigma[k];
        for (std::size_t i = 0; i < b.cols(); ++i)
            for (std::size_t j = 0; j < b.rows(); ++j)
                r(i, j) += s.v(i, k) * inv * std::conj(s.u(j, k));
    }
    return r;
}

}  // namespace polarmod
