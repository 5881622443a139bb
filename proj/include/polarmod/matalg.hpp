#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polarmod/complexmat.hpp"
#include "polarmod/errors.hpp"

namespace polarmod {

// Tolerances shared across the matrix backend.  rank_tol and the hermitian
// check are scaled by (1 + norm) at the point of use.
struct Tolerances {
    double identity_tol = 1e-8;   // residuals of operator identities
    double rank_tol = 1e-10;      // singular value / eigenvalue cutoff
    double defect_margin = 1e-9;  // distance to 1 required by (1-x)^(-1/2)
};

// Block sizes of the coefficient algebra  A = M_{n1} (+) ... (+) M_{nr}.
struct BlockProfile {
    std::vector<std::size_t> sizes;

    BlockProfile() = default;
    explicit BlockProfile(std::vector<std::size_t> s);

    std::size_t block_count() const { return sizes.size(); }
    bool operator==(const BlockProfile& o) const { return sizes == o.sizes; }
    std::string to_string() const;
};

// An element of A: one complex square matrix per block.
class AlgElement {
public:
    AlgElement() = default;
    AlgElement(BlockProfile profile, std::vector<CMat> blocks);

    static AlgElement zero(const BlockProfile& p);
    static AlgElement one(const BlockProfile& p);

    const BlockProfile& profile() const { return profile_; }
    const CMat& block(std::size_t i) const { return blocks_[i]; }
    std::size_t block_count() const { return blocks_.size(); }

    AlgElement operator+(const AlgElement& o) const;
    AlgElement operator-(const AlgElement& o) const;
    AlgElement operator*(const AlgElement& o) const;

private:
    BlockProfile profile_;
    std::vector<CMat> blocks_;
};

AlgElement alg_star(const AlgElement& a);
double alg_norm(const AlgElement& a);
bool is_positive(const AlgElement& a, const Tolerances& tol = {});

// Per-block Hermitian eigendecomposition.
struct HermSpectrum {
    std::vector<std::vector<double>> values;  // ascending, per block
    std::vector<CMat> vectors;                // unitary per block
};

// Throws NotHermitian when ||h - h*|| exceeds rank_tol * (1 + ||h||).
HermSpectrum herm_eig(const AlgElement& h, const Tolerances& tol = {});

enum class FuncKind {
    Sqrt,          // x -> sqrt(x)
    InvSqrtShift,  // x -> (1+x)^(-1/2)
    InvSqrtDefect, // x -> (1-x)^(-1/2)
    PinvSqrt,      // x -> x^(-1/2) above rank tolerance, 0 below
};

// Functional calculus on a positive-semidefinite Hermitian element.
AlgElement psd_funcalc(const AlgElement& h, FuncKind fn, const Tolerances& tol = {});

// Same calculus on a single Hermitian complex matrix; the module layer uses
// this on flattened per-block operator matrices.
CMat psd_funcalc_mat(const CMat& h, FuncKind fn, const Tolerances& tol = {});

}  // namespace polarmod
