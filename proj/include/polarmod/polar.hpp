#pragma once

#include <map>
#include <optional>
#include <string>

#include "polarmod/funbackend.hpp"
#include "polarmod/regular.hpp"

namespace polarmod {

// t = V |t| with V a partial isometry, initial space cl Ran(|t|), final
// space cl Ran(t).
struct PolarDecomposition {
    OperatorMatrix v;
    OperatorMatrix abs_t;
    OperatorMatrix initial_projection;  // V*V, on the domain module
    OperatorMatrix final_projection;    // VV*, on the codomain module
    std::map<std::string, double> residuals;
};

// s with tst = t, sts = s and ts, st selfadjoint projections.
struct GeneralizedInverse {
    OperatorMatrix s;      // SVD construction
    OperatorMatrix s_alt;  // least-squares construction from the range side
    bool bounded = true;
    std::map<std::string, double> residuals;
};

struct Thm31Report {
    bool cond_i = false;    // polar decomposition exists
    bool cond_ii = false;   // kernel/range-closure decompositions hold
    bool cond_iii = false;  // generalized inverses exist, adjoint to each other
    std::map<std::string, double> residuals;
    std::optional<std::string> certificate;
    double max_residual = 0.0;
};

// ---- matrix backend ----

PolarDecomposition polar_decompose(const RegularOperator& t, const Tolerances& tol = {});
GeneralizedInverse generalized_inverse(const RegularOperator& t, const Tolerances& tol = {});
Thm31Report verify_thm31(const RegularOperator& t, const Tolerances& tol = {});

// max residual of t* = V* |t*| and |F_{t*}| = V |F_t| V*.
double adjoint_polar_check(const RegularOperator& t, const Tolerances& tol = {});
// max of ||F_{|t|} - |F_t||| and ||F_t - V |F_t|||.
double cor32_check(const RegularOperator& t, const Tolerances& tol = {});

struct ClosedRangeSuite {
    bool range_closed = false;
    bool s_bounded = false;
    bool consistent = false;
    // Closed-range transfer between t and its bounded transform.
    bool transform_range_closed = false;
};

ClosedRangeSuite closed_range_suite(const RegularOperator& t, const Tolerances& tol = {});
ClosedRangeSuite closed_range_suite(const GradedOperator& gt, const GradedThresholds& th = {},
                                    const Tolerances& tol = {});

// ---- function backend (exact) ----

struct DiagThm31Report {
    bool cond_i = false;
    bool cond_ii = false;
    bool cond_iii = false;
    bool exact = false;  // identities verified with zero residual
    std::optional<std::string> certificate;
    std::optional<DiagPolar> polar;
    std::optional<DiagOperator> pinv;
};

DiagThm31Report verify_thm31(const DiagOperator& t);
ClosedRangeSuite closed_range_suite(const DiagOperator& t);

}  // namespace polarmod
