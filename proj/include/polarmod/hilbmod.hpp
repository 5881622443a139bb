#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "polarmod/matalg.hpp"

namespace polarmod {

// Convention used throughout: operators act on row vectors by right
// multiplication, y = x B.  The adjoint is then the entrywise star plus
// transpose, and the matrix of a composition  second o first  is
// mat(first) * mat(second) -- note the order flip against function notation.

// Element of the free module A^k: a row of k algebra elements.
class ModuleVector {
public:
    ModuleVector() = default;
    ModuleVector(BlockProfile profile, std::vector<AlgElement> entries);

    static ModuleVector zero(const BlockProfile& p, std::size_t rank);
    static ModuleVector basis(const BlockProfile& p, std::size_t rank, std::size_t j);

    const BlockProfile& profile() const { return profile_; }
    std::size_t rank() const { return entries_.size(); }
    const AlgElement& entry(std::size_t j) const { return entries_[j]; }

    ModuleVector operator+(const ModuleVector& o) const;
    ModuleVector operator-(const ModuleVector& o) const;

    // Left module action x -> a.x
    ModuleVector scale(const AlgElement& a) const;

    // Block i flattened to an n_i x (rank * n_i) complex matrix.
    CMat flat_block(std::size_t i) const;

private:
    BlockProfile profile_;
    std::vector<AlgElement> entries_;
};

// Adjointable A-linear map A^k -> A^m as a k x m array over A.
class OperatorMatrix {
public:
    OperatorMatrix() = default;
    OperatorMatrix(BlockProfile profile, std::size_t domain_rank, std::size_t codomain_rank,
                   std::vector<AlgElement> entries_row_major);

    static OperatorMatrix zero(const BlockProfile& p, std::size_t k, std::size_t m);
    static OperatorMatrix identity(const BlockProfile& p, std::size_t k);

    // Rebuild from per-block flattened matrices, shape (k n_i) x (m n_i).
    static OperatorMatrix from_flat_blocks(const BlockProfile& p, std::size_t k, std::size_t m,
                                           const std::vector<CMat>& blocks);

    const BlockProfile& profile() const { return profile_; }
    std::size_t domain_rank() const { return domain_rank_; }
    std::size_t codomain_rank() const { return codomain_rank_; }
    const AlgElement& entry(std::size_t j, std::size_t l) const {
        return entries_[j * codomain_rank_ + l];
    }

    // Block i as a (k n_i) x (m n_i) complex matrix; all spectral work
    // happens on these.
    CMat flat_block(std::size_t i) const;

    OperatorMatrix operator+(const OperatorMatrix& o) const;
    OperatorMatrix operator-(const OperatorMatrix& o) const;
    OperatorMatrix scaled(double c) const;

private:
    BlockProfile profile_;
    std::size_t domain_rank_ = 0, codomain_rank_ = 0;
    std::vector<AlgElement> entries_;
};

AlgElement inner_product(const ModuleVector& x, const ModuleVector& y);
double module_norm(const ModuleVector& x);

ModuleVector op_apply(const OperatorMatrix& b, const ModuleVector& x);
OperatorMatrix op_adjoint(const OperatorMatrix& b);

// Matrix of (second o first); shapes must chain.
OperatorMatrix op_compose(const OperatorMatrix& first, const OperatorMatrix& second);

double op_norm(const OperatorMatrix& b);
bool op_is_hermitian(const OperatorMatrix& b, double tol);

// |t| = (t^* t)^(1/2), a positive operator on the domain module.
OperatorMatrix abs_op(const OperatorMatrix& b, const Tolerances& tol = {});

// Orthogonal projections onto the closed range (in the codomain) and the
// kernel (in the domain).
OperatorMatrix range_projection(const OperatorMatrix& b, const Tolerances& tol = {});
OperatorMatrix kernel_projection(const OperatorMatrix& b, const Tolerances& tol = {});

// Submodule of A^k, held as an orthonormal row basis per block.
class Submodule {
public:
    Submodule() = default;
    Submodule(BlockProfile profile, std::size_t rank, std::vector<CMat> bases);

    static Submodule whole(const BlockProfile& p, std::size_t rank);
    static Submodule trivial(const BlockProfile& p, std::size_t rank);
    static Submodule span(const std::vector<ModuleVector>& generators, std::size_t rank,
                          const Tolerances& tol = {});

    const BlockProfile& profile() const { return profile_; }
    std::size_t rank() const { return rank_; }
    const CMat& basis(std::size_t i) const { return bases_[i]; }

private:
    BlockProfile profile_;
    std::size_t rank_ = 0;
    std::vector<CMat> bases_;  // per block, d_i x (rank * n_i), orthonormal rows
};

// Projections onto S and its orthogonal complement in A^k.
std::pair<OperatorMatrix, OperatorMatrix> decompose(std::size_t rank, const Submodule& s);

}  // namespace polarmod
