#include "polarmod/hilbmod.hpp"

#include <algorithm>
#include <cmath>

namespace polarmod {

ModuleVector::ModuleVector(BlockProfile profile, std::vector<AlgElement> entries)
    : profile_(std::move(profile)), entries_(std::move(entries)) {
    for (const AlgElement& e : entries_)
        if (!(e.profile() == profile_)) throw ProfileMismatch("vector entry profile differs");
}

ModuleVector ModuleVector::zero(const BlockProfile& p, std::size_t rank) {
    return ModuleVector(p, std::vector<AlgElement>(rank, AlgElement::zero(p)));
}

ModuleVector ModuleVector::basis(const BlockProfile& p, std::size_t rank, std::size_t j) {
    std::vector<AlgElement> e(rank, AlgElement::zero(p));
    e.at(j) = AlgElement::one(p);
    return ModuleVector(p, std::move(e));
}

ModuleVector ModuleVector::operator+(const ModuleVector& o) const {
    if (rank() != o.rank()) throw ShapeMismatch("vector rank mismatch");
    std::vector<AlgElement> e;
    for (std::size_t j = 0; j < rank(); ++j) e.push_back(entries_[j] + o.entries_[j]);
    return ModuleVector(profile_, std::move(e));
}

ModuleVector ModuleVector::operator-(const ModuleVector& o) const {
    if (rank() != o.rank()) throw ShapeMismatch("vector rank mismatch");
    std::vector<AlgElement> e;
    for (std::size_t j = 0; j < rank(); ++j) e.push_back(entries_[j] - o.entries_[j]);
    return ModuleVector(profile_, std::move(e));
}

ModuleVector ModuleVector::scale(const AlgElement& a) const {
    std::vector<AlgElement> e;
    for (std::size_t j = 0; j < rank(); ++j) e.push_back(a * entries_[j]);
    return ModuleVector(profile_, std::move(e));
}

CMat ModuleVector::flat_block(std::size_t i) const {
    const std::size_t n = profile_.sizes[i];
    CMat out(n, rank() * n);
    for (std::size_t j = 0; j < rank(); ++j) {
        const CMat& b = entries_[j].block(i);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) out(r, j * n + c) = b(r, c);
    }
    return out;
}

OperatorMatrix::OperatorMatrix(BlockProfile profile, std::size_t domain_rank,
                               std::size_t codomain_rank,
                               std::vector<AlgElement> entries_row_major)
    : profile_(std::move(profile)),
      domain_rank_(domain_rank),
      codomain_rank_(codomain_rank),
      entries_(std::move(entries_row_major)) {
    if (entries_.size() != domain_rank_ * codomain_rank_)
        throw ShapeMismatch("operator entry count mismatch");
    for (const AlgElement& e : entries_)
        if (!(e.profile() == profile_)) throw ProfileMismatch("operator entry profile differs");
}

OperatorMatrix OperatorMatrix::zero(const BlockProfile& p, std::size_t k, std::size_t m) {
    return OperatorMatrix(p, k, m, std::vector<AlgElement>(k * m, AlgElement::zero(p)));
}

OperatorMatrix OperatorMatrix::identity(const BlockProfile& p, std::size_t k) {
    std::vector<AlgElement> e(k * k, AlgElement::zero(p));
    for (std::size_t j = 0; j < k; ++j) e[j * k + j] = AlgElement::one(p);
    return OperatorMatrix(p, k, k, std::move(e));
}

OperatorMatrix OperatorMatrix::from_flat_blocks(const BlockProfile& p, std::size_t k,
                                                std::size_t m,
                                                const std::vector<CMat>& blocks) {
    if (blocks.size() != p.sizes.size()) throw ShapeMismatch("flat block count mismatch");
    std::vector<AlgElement> entries;
    entries.reserve(k * m);
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t l = 0; l < m; ++l) {
            std::vector<CMat> ablocks;
            for (std::size_t i = 0; i < p.sizes.size(); ++i) {
                const std::size_t n = p.sizes[i];
                if (blocks[i].rows() != k * n || blocks[i].cols() != m * n)
                    throw ShapeMismatch("flat block shape mismatch");
                CMat blk(n, n);
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t c = 0; c < n; ++c) blk(r, c) = blocks[i](j * n + r, l * n + c);
                ablocks.push_back(std::move(blk));
            }
            entries.emplace_back(p, std::move(ablocks));
        }
    }
    return OperatorMatrix(p, k, m, std::move(entries));
}

CMat OperatorMatrix::flat_block(std::size_t i) const {
    const std::size_t n = profile_.sizes[i];
    CMat out(domain_rank_ * n, codomain_rank_ * n);
    for (std::size_t j = 0; j < domain_rank_; ++j)
        for (std::size_t l = 0; l < codomain_rank_; ++l) {
            const CMat& b = entry(j, l).block(i);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) out(j * n + r, l * n + c) = b(r, c);
        }
    return out;
}

OperatorMatrix OperatorMatrix::operator+(const OperatorMatrix& o) const {
    if (domain_rank_ != o.domain_rank_ || codomain_rank_ != o.codomain_rank_)
        throw ShapeMismatch("operator sum shape mismatch");
    std::vector<AlgElement> e;
    for (std::size_t i = 0; i < entries_.size(); ++i) e.push_back(entries_[i] + o.entries_[i]);
    return OperatorMatrix(profile_, domain_rank_, codomain_rank_, std::move(e));
}

OperatorMatrix OperatorMatrix::operator-(const OperatorMatrix& o) const {
    if (domain_rank_ != o.domain_rank_ || codomain_rank_ != o.codomain_rank_)
        throw ShapeMismatch("operator difference shape mismatch");
    std::vector<AlgElement> e;
    for (std::size_t i = 0; i < entries_.size(); ++i) e.push_back(entries_[i] - o.entries_[i]);
    return OperatorMatrix(profile_, domain_rank_, codomain_rank_, std::move(e));
}

OperatorMatrix OperatorMatrix::scaled(double c) const {
    std::vector<CMat> blocks;
    for (std::size_t i = 0; i < profile_.sizes.size(); ++i)
        blocks.push_back(flat_block(i) * Complex(c, 0.0));
    return from_flat_blocks(profile_, domain_rank_, codomain_rank_, blocks);
}

AlgElement inner_product(const ModuleVector& x, const ModuleVector& y) {
    if (!(x.profile() == y.profile())) throw ProfileMismatch("inner product profile mismatch");
    if (x.rank() != y.rank()) throw ShapeMismatch("inner product rank mismatch");
    std::vector<CMat> blocks;
    for (std::size_t i = 0; i < x.profile().block_count(); ++i)
        blocks.push_back(x.flat_block(i) * y.flat_block(i).adjoint());
    return AlgElement(x.profile(), std::move(blocks));
}

double module_norm(const ModuleVector& x) {
    return std::sqrt(alg_norm(inner_product(x, x)));
}

ModuleVector op_apply(const OperatorMatrix& b, const ModuleVector& x) {
    if (x.rank() != b.domain_rank()) throw ShapeMismatch("op_apply rank mismatch");
    if (!(x.profile() == b.profile())) throw ProfileMismatch("op_apply profile mismatch");
    std::vector<AlgElement> out(b.codomain_rank(), AlgElement::zero(b.profile()));
    for (std::size_t l = 0; l < b.codomain_rank(); ++l)
        for (std::size_t j = 0; j < b.domain_rank(); ++j)
            out[l] = out[l] + x.entry(j) * b.entry(j, l);
    return ModuleVector(b.profile(), std::move(out));
}

OperatorMatrix op_adjoint(const OperatorMatrix& b) {
    std::vector<AlgElement> e;
    e.reserve(b.domain_rank() * b.codomain_rank());
    for (std::size_t l = 0; l < b.codomain_rank(); ++l)
        for (std::size_t j = 0; j < b.domain_rank(); ++j) e.push_back(alg_star(b.entry(j, l)));
    return OperatorMatrix(b.profile(), b.codomain_rank(), b.domain_rank(), std::move(e));
}

OperatorMatrix op_compose(const OperatorMatrix& first, const OperatorMatrix& second) {
    if (first.codomain_rank() != second.domain_rank())
        throw ShapeMismatch("op_compose rank mismatch");
    if (!(first.profile() == second.profile())) throw ProfileMismatch("op_compose profile mismatch");
    const std::size_t k = first.domain_rank();
    const std::size_t m = second.codomain_rank();
    std::vector<AlgElement> e(k * m, AlgElement::zero(first.profile()));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = 0; l < m; ++l)
            for (std::size_t p = 0; p < first.codomain_rank(); ++p)
                e[j * m + l] = e[j * m + l] + first.entry(j, p) * second.entry(p, l);
    return OperatorMatrix(first.profile(), k, m, std::move(e));
}

double op_norm(const OperatorMatrix& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < b.profile().block_count(); ++i)
        m = std::max(m, b.flat_block(i).norm2());
    return m;
}

bool op_is_hermitian(const OperatorMatrix& b, double tol) {
    if (b.domain_rank() != b.codomain_rank()) return false;
    return op_norm(b - op_adjoint(b)) <= tol;
}

OperatorMatrix abs_op(const OperatorMatrix& b, const Tolerances& tol) {
    std::vector<CMat> blocks;
    for (std::size_t i = 0; i < b.profile().block_count(); ++i) {
        const CMat f = b.flat_block(i);
        blocks.push_back(psd_funcalc_mat(f * f.adjoint(), FuncKind::Sqrt, tol));
    }
    return OperatorMatrix::from_flat_blocks(b.profile(), b.domain_rank(), b.domain_rank(), blocks);
}

OperatorMatrix range_projection(const OperatorMatrix& b, const Tolerances& tol) {
    std::vector<CMat> blocks;
    for (std::size_t i = 0; i < b.profile().block_count(); ++i) {
        const CMat f = b.flat_block(i);
        const Svd s = svd_compact(f, tol.rank_tol);
        blocks.push_back(s.v * s.v.adjoint());
    }
    return OperatorMatrix::from_flat_blocks(b.profile(), b.codomain_rank(), b.codomain_rank(),
                                            blocks);
}

OperatorMatrix kernel_projection(const OperatorMatrix& b, const Tolerances& tol) {
    std::vector<CMat> blocks;
    for (std::size_t i = 0; i < b.profile().block_count(); ++i) {
        const CMat f = b.flat_block(i);
        const Svd s = svd_compact(f, tol.rank_tol);
        blocks.push_back(CMat::identity(f.rows()) - s.u * s.u.adjoint());
    }
    return OperatorMatrix::from_flat_blocks(b.profile(), b.domain_rank(), b.domain_rank(), blocks);
}

Submodule::Submodule(BlockProfile profile, std::size_t rank, std::vector<CMat> bases)
    : profile_(std::move(profile)), rank_(rank), bases_(std::move(bases)) {
    if (bases_.size() != profile_.block_count()) throw ShapeMismatch("submodule block count");
    for (std::size_t i = 0; i < bases_.size(); ++i) {
        const std::size_t dim = rank_ * profile_.sizes[i];
        if (bases_[i].cols() != dim && bases_[i].rows() != 0)
            throw ShapeMismatch("submodule basis width mismatch");
        if (bases_[i].rows() > dim) throw ShapeMismatch("submodule basis too large");
        const CMat g = bases_[i] * bases_[i].adjoint();
        if ((g - CMat::identity(bases_[i].rows())).max_abs() > 1e-10)
            throw ShapeMismatch("submodule basis rows not orthonormal");
    }
}

Submodule Submodule::whole(const BlockProfile& p, std::size_t rank) {
    std::vector<CMat> b;
    for (std::size_t n : p.sizes) b.push_back(CMat::identity(rank * n));
    return Submodule(p, rank, std::move(b));
}

Submodule Submodule::trivial(const BlockProfile& p, std::size_t rank) {
    std::vector<CMat> b;
    for (std::size_t n : p.sizes) b.emplace_back(0, rank * n);
    return Submodule(p, rank, std::move(b));
}

Submodule Submodule::span(const std::vector<ModuleVector>& generators, std::size_t rank,
                          const Tolerances& tol) {
    if (generators.empty()) throw ShapeMismatch("submodule span needs generators");
    const BlockProfile p = generators.front().profile();
    std::vector<CMat> bases;
    for (std::size_t i = 0; i < p.block_count(); ++i) {
        const std::size_t n = p.sizes[i];
        CMat stacked(generators.size() * n, rank * n);
        for (std::size_t g = 0; g < generators.size(); ++g) {
            if (generators[g].rank() != rank) throw ShapeMismatch("generator rank mismatch");
            const CMat f = generators[g].flat_block(i);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < rank * n; ++c) stacked(g * n + r, c) = f(r, c);
        }
        const Svd s = svd_compact(stacked, tol.rank_tol);
        // Orthonormal row basis of the row space: v_k^H as rows.
        bases.push_back(s.v.adjoint());
    }
    return Submodule(p, rank, std::move(bases));
}

std::pair<OperatorMatrix, OperatorMatrix> decompose(std::size_t rank, const Submodule& s) {
    const BlockProfile& p = s.profile();
    if (s.rank() != rank) throw ShapeMismatch("decompose rank mismatch");
    std::vector<CMat> pb, qb;
    for (std::size_t i = 0; i < p.block_count(); ++i) {
        const std::size_t dim = rank * p.sizes[i];
        const CMat& w = s.basis(i);
        const CMat proj = (w.rows() == 0) ? CMat(dim, dim) : w.adjoint() * w;
        pb.push_back(proj);
        qb.push_back(CMat::identity(dim) - proj);
    }
    return {OperatorMatrix::from_flat_blocks(p, rank, rank, pb),
            OperatorMatrix::from_flat_blocks(p, rank, rank, qb)};
}

}  // namespace polarmod
