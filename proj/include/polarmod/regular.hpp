#pragma once

#include <vector>

#include "polarmod/hilbmod.hpp"

namespace polarmod {

// Contractivity / dense-defect report for a candidate bounded transform.
// In this finite-dimensional backend "dense range of 1 - F*F" reads as
// "invertible above the rank tolerance".
struct TransformValidity {
    bool contractive = false;
    double norm = 0.0;
    double defect_min_eigenvalue = 0.0;
    bool dense_defect = false;
};

TransformValidity validate_transform(const OperatorMatrix& f, const Tolerances& tol = {});

// A regular operator carried either explicitly or through its bounded
// transform.  Both forms keep the explicit matrix around; the Transform
// form additionally records the validity witness of the data it came from.
class RegularOperator {
public:
    static RegularOperator from_matrix(OperatorMatrix t);

    // Throws DefectSingular when 1 - F*F is not invertible: such data
    // encodes an operator with no bounded matrix representative.
    static RegularOperator from_transform(const OperatorMatrix& f, const Tolerances& tol = {});

    const OperatorMatrix& matrix() const { return matrix_; }
    bool carried_as_transform() const { return from_transform_; }
    const TransformValidity& transform_validity() const { return validity_; }

    const BlockProfile& profile() const { return matrix_.profile(); }
    std::size_t domain_rank() const { return matrix_.domain_rank(); }
    std::size_t codomain_rank() const { return matrix_.codomain_rank(); }

private:
    OperatorMatrix matrix_;
    bool from_transform_ = false;
    TransformValidity validity_;
};

// Q_t = (1 + t*t)^(-1/2), positive and invertible on the domain module.
OperatorMatrix q_of(const RegularOperator& t, const Tolerances& tol = {});
// Q_{t*} = (1 + t t*)^(-1/2) on the codomain module.
OperatorMatrix q_of_adjoint(const RegularOperator& t, const Tolerances& tol = {});

// F_t = t Q_t, the bounded transform.
OperatorMatrix btransform(const RegularOperator& t, const Tolerances& tol = {});

// t = F (1 - F*F)^(-1/2); throws DefectSingular outside the bijection's range.
RegularOperator inverse_btransform(const OperatorMatrix& f, const Tolerances& tol = {});

struct OperatorClass {
    bool normal = false;
    bool selfadjoint = false;
    bool positive = false;
    double normal_residual = 0.0;
    double selfadjoint_residual = 0.0;
    // Agreement between the flags of t and of F_t.
    bool transform_agrees = false;
};

OperatorClass classify(const RegularOperator& t, const Tolerances& tol = {});

// Residuals of the two commutation identities
//   F_t p(F*F) = p(FF*) F_t    and    t Q_t^2 = Q_{t*} t Q_t
// for a real polynomial p (coefficients lowest degree first, degree <= 16).
std::pair<double, double> remark22_residuals(const RegularOperator& t,
                                             const std::vector<double>& poly,
                                             const Tolerances& tol = {});

// Residual of the orthogonal decomposition F (+) E = G(s) (+) V G(s~),
// V(x,y) = (y,-x):  max of subspace-orthogonality defect and dimension
// mismatch, per block.
double graph_decomposition_check(const RegularOperator& t, const OperatorMatrix& s,
                                 const OperatorMatrix& s_tilde, const Tolerances& tol = {});

// Finite direct sum of components with (possibly) growing norms; the
// desk-scale surrogate for an unbounded operator.
struct GradedOperator {
    std::vector<RegularOperator> components;
};

struct GradedThresholds {
    double s_norm_threshold = 10.0;     // flag unbounded inverse above this
    double sigma_min_threshold = 0.1;   // flag non-uniformly-closed range below this
};

struct GradedComponentRow {
    double t_norm = 0.0;
    double f_norm = 0.0;
    double sigma_min_nonzero = 0.0;  // 0 when the component is zero
    double s_norm = 0.0;
    double v_norm = 0.0;
};

struct GradedReport {
    std::vector<GradedComponentRow> rows;
    bool unbounded_inverse = false;
    bool range_not_uniformly_closed = false;
};

GradedReport graded_report(const GradedOperator& gt, const GradedThresholds& th = {},
                           const Tolerances& tol = {});

}  // namespace polarmod
