#include "polarmod/matalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace polarmod {

BlockProfile::BlockProfile(std::vector<std::size_t> s) : sizes(std::move(s)) {
    if (sizes.empty()) throw SchemaError("block profile must be nonempty");
    for (std::size_t n : sizes)
        if (n < 1) throw SchemaError("block sizes must be >= 1");
}

std::string BlockProfile::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < sizes.size(); ++i) os << (i ? "," : "") << sizes[i];
    os << "]";
    return os.str();
}

AlgElement::AlgElement(BlockProfile profile, std::vector<CMat> blocks)
    : profile_(std::move(profile)), blocks_(std::move(blocks)) {
    if (blocks_.size() != profile_.sizes.size())
        throw SchemaError("block count does not match profile");
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (blocks_[i].rows() != profile_.sizes[i] || blocks_[i].cols() != profile_.sizes[i])
            throw SchemaError("block shape does not match profile");
        if (!blocks_[i].all_finite()) throw SchemaError("non-finite entry in algebra element");
    }
}

AlgElement AlgElement::zero(const BlockProfile& p) {
    std::vector<CMat> b;
    for (std::size_t n : p.sizes) b.emplace_back(n, n);
    return AlgElement(p, std::move(b));
}

AlgElement AlgElement::one(const BlockProfile& p) {
    std::vector<CMat> b;
    for (std::size_t n : p.sizes) b.push_back(CMat::identity(n));
    return AlgElement(p, std::move(b));
}

namespace {
void require_same_profile(const AlgElement& a, const AlgElement& b) {
    if (!(a.profile() == b.profile()))
        throw ProfileMismatch("profiles " + a.profile().to_string() + " and " +
                              b.profile().to_string() + " differ");
}
}  // namespace

AlgElement AlgElement::operator+(const AlgElement& o) const {
    require_same_profile(*this, o);
    std::vector<CMat> b;
    for (std::size_t i = 0; i < blocks_.size(); ++i) b.push_back(blocks_[i] + o.blocks_[i]);
    return AlgElement(profile_, std::move(b));
}

AlgElement AlgElement::operator-(const AlgElement& o) const {
    require_same_profile(*this, o);
    std::vector<CMat> b;
    for (std::size_t i = 0; i < blocks_.size(); ++i) b.push_back(blocks_[i] - o.blocks_[i]);
    return AlgElement(profile_, std::move(b));
}

AlgElement AlgElement::operator*(const AlgElement& o) const {
    require_same_profile(*this, o);
    std::vector<CMat> b;
    for (std::size_t i = 0; i < blocks_.size(); ++i) b.push_back(blocks_[i] * o.blocks_[i]);
    return AlgElement(profile_, std::move(b));
}

AlgElement alg_star(const AlgElement& a) {
    std::vector<CMat> b;
    for (std::size_t i = 0; i < a.block_count(); ++i) b.push_back(a.block(i).adjoint());
    return AlgElement(a.profile(), std::move(b));
}

double alg_norm(const AlgElement& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.block_count(); ++i) m = std::max(m, a.block(i).norm2());
    return m;
}

bool is_positive(const AlgElement& a, const Tolerances& tol) {
    const double nrm = alg_norm(a);
    const double herm_tol = tol.rank_tol * (1.0 + nrm);
    for (std::size_t i = 0; i < a.block_count(); ++i) {
        const CMat& h = a.block(i);
        if ((h - h.adjoint()).norm2() > herm_tol) return false;
        HermEig e = eig_hermitian((h + h.adjoint()) * Complex(0.5, 0.0));
        if (!e.values.empty() && e.values.front() < -herm_tol) return false;
    }
    return true;
}

HermSpectrum herm_eig(const AlgElement& h, const Tolerances& tol) {
    const double nrm = alg_norm(h);
    HermSpectrum out;
    for (std::size_t i = 0; i < h.block_count(); ++i) {
        const CMat& b = h.block(i);
        if ((b - b.adjoint()).norm2() > tol.rank_tol * (1.0 + nrm))
            throw NotHermitian("block " + std::to_string(i) + " is not Hermitian");
        // Symmetrize before the Jacobi sweeps so roundoff cannot leak in.
        HermEig e = eig_hermitian((b + b.adjoint()) * Complex(0.5, 0.0));
        out.values.push_back(std::move(e.values));
        out.vectors.push_back(std::move(e.vectors));
    }
    return out;
}

CMat psd_funcalc_mat(const CMat& h, FuncKind fn, const Tolerances& tol) {
    const double nrm = h.norm2();
    if ((h - h.adjoint()).norm2() > tol.rank_tol * (1.0 + nrm))
        throw NotHermitian("functional calculus input is not Hermitian");
    HermEig e = eig_hermitian((h + h.adjoint()) * Complex(0.5, 0.0));
    const double cut = tol.rank_tol * (1.0 + nrm);

    std::vector<double> mapped(e.values.size());
    for (std::size_t j = 0; j < e.values.size(); ++j) {
        double x = e.values[j];
        if (x < -cut) throw NegativeSpectrum("eigenvalue " + std::to_string(x) + " below zero");
        x = std::max(x, 0.0);
        switch (fn) {
            case FuncKind::Sqrt:
                mapped[j] = std::sqrt(x);
                break;
            case FuncKind::InvSqrtShift:
                mapped[j] = 1.0 / std::sqrt(1.0 + x);
                break;
            case FuncKind::InvSqrtDefect:
                if (x > 1.0 - tol.defect_margin)
                    throw DefectSingular("eigenvalue " + std::to_string(x) +
                                         " within defect margin of 1");
                mapped[j] = 1.0 / std::sqrt(1.0 - x);
                break;
            case FuncKind::PinvSqrt:
                mapped[j] = (x > cut) ? 1.0 / std::sqrt(x) : 0.0;
                break;
        }
    }

    const std::size_t n = h.rows();
    CMat r(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (mapped[k] == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                r(i, j) += e.vectors(i, k) * mapped[k] * std::conj(e.vectors(j, k));
    }
    return r;
}

AlgElement psd_funcalc(const AlgElement& h, FuncKind fn, const Tolerances& tol) {
    std::vector<CMat> blocks;
    for (std::size_t i = 0; i < h.block_count(); ++i)
        blocks.push_back(psd_funcalc_mat(h.block(i), fn, tol));
    return AlgElement(h.profile(), std::move(blocks));
}

}  // namespace polarmod
