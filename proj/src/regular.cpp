#include "polarmod/regular.hpp"

#include <algorithm>
#include <cmath>

namespace polarmod {

namespace {

// p(h) for Hermitian h, evaluated by Horner on the matrix.
CMat poly_of_hermitian(const std::vector<double>& poly, const CMat& h) {
    const std::size_t n = h.rows();
    CMat acc(n, n);
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
        acc = acc * h;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
    }
    return acc;
}

}  // namespace

TransformValidity validate_transform(const OperatorMatrix& f, const Tolerances& tol) {
    TransformValidity v;
    v.norm = op_norm(f);
    v.contractive = v.norm <= 1.0 + 1e-12;
    double lam_min = 1.0;
    for (std::size_t i = 0; i < f.profile().block_count(); ++i) {
        const CMat m = f.flat_block(i);
        const CMat defect = CMat::identity(m.rows()) - m * m.adjoint();
        HermEig e = eig_hermitian((defect + defect.adjoint()) * Complex(0.5, 0.0));
        if (!e.values.empty()) lam_min = std::min(lam_min, e.values.front());
    }
    v.defect_min_eigenvalue = lam_min;
    v.dense_defect = v.contractive && lam_min > tol.rank_tol;
    return v;
}

RegularOperator RegularOperator::from_matrix(OperatorMatrix t) {
    RegularOperator r;
    r.matrix_ = std::move(t);
    return r;
}

RegularOperator RegularOperator::from_transform(const OperatorMatrix& f, const Tolerances& tol) {
    const TransformValidity v = validate_transform(f, tol);
    if (!v.contractive)
        throw DefectSingular("transform data is not contractive (norm " + std::to_string(v.norm) +
                             ")");
    if (!v.dense_defect)
        throw DefectSingular("1 - F*F is singular: no bounded matrix represents this operator");
    std::vector<CMat> blocks;
    for (std::size_t i = 0; i < f.profile().block_count(); ++i) {
        const CMat m = f.flat_block(i);
        const CMat w = psd_funcalc_mat(m * m.adjoint(), FuncKind::InvSqrtDefect, tol);
        blocks.push_back(w * m);
    }
    RegularOperator r;
    r.matrix_ = OperatorMatrix::from_flat_blocks(f.profile(), f.domain_rank(), f.codomain_rank(),
                                                 blocks);
    r.from_transform_ = true;
    r.validity_ = v;
    return r;
}

OperatorMatrix q_of(const RegularOperator& t, const Tolerances& tol) {
    const OperatorMatrix& b = t.matrix();
    std::vector<CMat> blocks;
    for (std::size_t i = 0; i < b.profile().block_count(); ++i) {
        const CMat m = b.flat_block(i);
        blocks.push_back(psd_funcalc_mat(m * m.adjoint(), FuncKind::InvSqrtShift, tol));
    }
    return OperatorMatrix::from_flat_blocks(b.profile(), b.domain_rank(), b.domain_rank(), blocks);
}

OperatorMatrix q_of_adjoint(const RegularOperator& t, const Tolerances& tol) {
    const OperatorMatrix& b = t.matrix();
    std::vector<CMat> blocks;
    for (std::size_t i = 0; i < b.profile().block_count(); ++i) {
        const CMat m = b.flat_block(i);
        blocks.push_back(psd_funcalc_mat(m.adjoint() * m, FuncKind::InvSqrtShift, tol));
    }
    return OperatorMatrix::from_flat_blocks(b.profile(), b.codomain_rank(), b.codomain_rank(),
                                            blocks);
}

OperatorMatrix btransform(const RegularOperator& t, const Tolerances& tol) {
    const OperatorMatrix& b = t.matrix();
    std::vector<CMat> blocks;
    for (std::size_t i = 0; i < b.profile().block_count(); ++i) {
        const CMat m = b.flat_block(i);
        const CMat q = psd_funcalc_mat(m * m.adjoint(), FuncKind::InvSqrtShift, tol);
        blocks.push_back(q * m);
    }
    return OperatorMatrix::from_flat_blocks(b.profile(), b.domain_rank(), b.codomain_rank(),
                                            blocks);
}

RegularOperator inverse_btransform(const OperatorMatrix& f, const Tolerances& tol) {
    return RegularOperator::from_transform(f, tol);
}

OperatorClass classify(const RegularOperator& t, const Tolerances& tol) {
    const OperatorMatrix& b = t.matrix();
    if (b.domain_rank() != b.codomain_rank())
        throw NotSquare("classification needs a square operator");

    OperatorClass c;
    const OperatorMatrix bstar = op_adjoint(b);
    c.selfadjoint_residual = op_norm(b - bstar);
    c.normal_residual = op_norm(op_compose(b, bstar) - op_compose(bstar, b));
    c.selfadjoint = c.selfadjoint_residual <= tol.identity_tol;
    c.normal = c.normal_residual <= tol.identity_tol || c.selfadjoint;

    bool positive = c.selfadjoint;
    if (positive) {
        const double nrm = op_norm(b);
        for (std::size_t i = 0; positive && i < b.profile().block_count(); ++i) {
            const CMat m = b.flat_block(i);
            HermEig e = eig_hermitian((m + m.adjoint()) * Complex(0.5, 0.0));
            if (!e.values.empty() && e.values.front() < -tol.rank_tol * (1.0 + nrm))
                positive = false;
        }
    }
    c.positive = positive;

    // A regular operator is selfadjoint/positive exactly when its bounded
    // transform is.
    const OperatorMatrix f = btransform(t, tol);
    const bool f_selfadjoint = op_is_hermitian(f, tol.identity_tol);
    bool f_positive = f_selfadjoint;
    if (f_positive) {
        const double nrm = op_norm(f);
        for (std::size_t i = 0; f_positive && i < f.profile().block_count(); ++i) {
            const CMat m = f.flat_block(i);
            HermEig e = eig_hermitian((m + m.adjoint()) * Complex(0.5, 0.0));
            if (!e.values.empty() && e.values.front() < -tol.rank_tol * (1.0 + nrm))
                f_positive = false;
        }
    }
    c.transform_agrees = (f_selfadjoint == c.selfadjoint) && (f_positive == c.positive);
    return c;
}

std::pair<double, double> remark22_residuals(const RegularOperator& t,
                                             const std::vector<double>& poly,
                                             const Tolerances& tol) {
    if (poly.size() > 17) throw SchemaError("polynomial degree capped at 16");
    const OperatorMatrix& b = t.matrix();
    double r1 = 0.0, r2 = 0.0;
    for (std::size_t i = 0; i < b.profile().block_count(); ++i) {
        const CMat m = b.flat_block(i);
        const CMat q = psd_funcalc_mat(m * m.adjoint(), FuncKind::InvSqrtShift, tol);
        const CMat qs = psd_funcalc_mat(m.adjoint() * m, FuncKind::InvSqrtShift, tol);
        const CMat f = q * m;

        const CMat lhs1 = poly_of_hermitian(poly, f * f.adjoint()) * f;
        const CMat rhs1 = f * poly_of_hermitian(poly, f.adjoint() * f);
        r1 = std::max(r1, (lhs1 - rhs1).norm2());

        // t Q_t^2 versus Q_{t*} t Q_t.
        const CMat lhs2 = q * q * m;
        const CMat rhs2 = q * m * qs;
        r2 = std::max(r2, (lhs2 - rhs2).norm2());
    }
    return {r1, r2};
}

double graph_decomposition_check(const RegularOperator& t, const OperatorMatrix& s,
                                 const OperatorMatrix& s_tilde, const Tolerances& tol) {
    const OperatorMatrix& b = t.matrix();
    if (s.domain_rank() != b.codomain_rank() || s.codomain_rank() != b.domain_rank() ||
        s_tilde.domain_rank() != b.domain_rank() || s_tilde.codomain_rank() != b.codomain_rank())
        throw ShapeMismatch("generalized inverse shapes do not match the operator");
    if (!(s.profile() == b.profile()) || !(s_tilde.profile() == b.profile()))
        throw ProfileMismatch("graph check profile mismatch");

    double worst = 0.0;
    for (std::size_t i = 0; i < b.profile().block_count(); ++i) {
        const std::size_t n = b.profile().sizes[i];
        const std::size_t kd = b.domain_rank() * n;   // dim of E block
        const std::size_t md = b.codomain_rank() * n; // dim of F block
        const CMat ms = s.flat_block(i);              // md x kd
        const CMat mst = s_tilde.flat_block(i);       // kd x md

        // Row bases inside F (+) E: G(s) = rows of [I | ms], V G(s~) = rows
        // of [mst | -I].
        CMat g1(md, md + kd);
        for (std::size_t r = 0; r < md; ++r) {
            g1(r, r) = 1.0;
            for (std::size_t c = 0; c < kd; ++c) g1(r, md + c) = ms(r, c);
        }
        CMat g2(kd, md + kd);
        for (std::size_t r = 0; r < kd; ++r) {
            for (std::size_t c = 0; c < md; ++c) g2(r, c) = mst(r, c);
            g2(r, md + r) = -1.0;
        }

        const Svd s1 = svd_compact(g1, tol.rank_tol);
        const Svd s2 = svd_compact(g2, tol.rank_tol);
        const CMat p1 = s1.v * s1.v.adjoint();
        const CMat p2 = s2.v * s2.v.adjoint();
        const double orth = (p1 * p2).norm2();
        const double dim_gap =
            std::abs(double(s1.sigma.size()) + double(s2.sigma.size()) - double(md + kd));
        worst = std::max({worst, orth, dim_gap});
    }
    return worst;
}

GradedReport graded_report(const GradedOperator& gt, const GradedThresholds& th,
                           const Tolerances& tol) {
    if (gt.components.empty()) throw ShapeMismatch("graded operator needs components");
    GradedReport rep;
    for (const RegularOperator& comp : gt.components) {
        const OperatorMatrix& b = comp.matrix();
        GradedComponentRow row;
        row.t_norm = op_norm(b);
        row.f_norm = op_norm(btransform(comp, tol));
        double sigma_min = 0.0;
        double s_norm = 0.0;
        double v_norm = 0.0;
        for (std::size_t i = 0; i < b.profile().block_count(); ++i) {
            const Svd s = svd_compact(b.flat_block(i), tol.rank_tol);
            if (!s.sigma.empty()) {
                const double smallest = s.sigma.back();
                sigma_min = (sigma_min == 0.0) ? smallest : std::min(sigma_min, smallest);
                s_norm = std::max(s_norm, 1.0 / smallest);
                v_norm = 1.0;
            }
        }
        row.sigma_min_nonzero = sigma_min;
        row.s_norm = s_norm;
        row.v_norm = v_norm;
        rep.rows.push_back(row);
    }

    double max_s = 0.0, min_sigma = -1.0;
    bool contractive_isometries = true;
    for (const GradedComponentRow& r : rep.rows) {
        max_s = std::max(max_s, r.s_norm);
        if (r.sigma_min_nonzero > 0.0)
            min_sigma = (min_sigma < 0.0) ? r.sigma_min_nonzero
                                          : std::min(min_sigma, r.sigma_min_nonzero);
        if (r.v_norm > 1.0 + 1e-12) contractive_isometries = false;
    }
    rep.unbounded_inverse = contractive_isometries && max_s >= th.s_norm_threshold;
    rep.range_not_uniformly_closed = (min_sigma >= 0.0 && min_sigma <= th.sigma_min_threshold);
    return rep;
}

}  // namespace polarmod
