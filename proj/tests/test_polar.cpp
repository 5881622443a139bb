#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polarmod/polar.hpp"
#include "polarmod/random_gen.hpp"

using namespace polarmod;

namespace {

OperatorMatrix scalar_matrix(std::size_t k, std::size_t m,
                             const std::vector<double>& row_major) {
    const BlockProfile p({1});
    std::vector<AlgElement> entries;
    for (double v : row_major) {
        CMat c(1, 1);
        c(0, 0) = v;
        entries.emplace_back(p, std::vector<CMat>{c});
    }
    return OperatorMatrix(p, k, m, std::move(entries));
}

double entry00(const OperatorMatrix& b, std::size_t i, std::size_t j) {
    return b.entry(i, j).block(0)(0, 0).real();
}

double max_residual(const std::map<std::string, double>& rs) {
    double m = 0.0;
    for (const auto& [_, r] : rs) m = std::max(m, r);
    return m;
}

}  // namespace

TEST_CASE("polar decomposition of the rank-one shift") {
    const OperatorMatrix b = scalar_matrix(2, 2, {0, 1, 0, 0});
    const PolarDecomposition pd = polar_decompose(RegularOperator::from_matrix(b));
    CHECK(entry00(pd.v, 0, 1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(entry00(pd.v, 0, 0)) < 1e-12);
    CHECK(std::abs(entry00(pd.v, 1, 0)) < 1e-12);
    CHECK(std::abs(entry00(pd.v, 1, 1)) < 1e-12);
    // |t| is the projection onto the first coordinate
    CHECK(entry00(pd.abs_t, 0, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(entry00(pd.abs_t, 1, 1)) < 1e-12);
    CHECK(max_residual(pd.residuals) < 1e-10);
}

TEST_CASE("generalized inverse of diag(3,4)") {
    const OperatorMatrix b = scalar_matrix(2, 2, {3, 0, 0, 4});
    const GeneralizedInverse gi = generalized_inverse(RegularOperator::from_matrix(b));
    CHECK(entry00(gi.s, 0, 0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(entry00(gi.s, 1, 1) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(op_norm(gi.s - gi.s_alt) < 1e-10);
    CHECK(gi.bounded);
    CHECK(max_residual(gi.residuals) < 1e-10);
}

TEST_CASE("polar and inverse identities on random operators") {
    InstanceGen gen(101);
    for (int it = 0; it < 25; ++it) {
        const BlockProfile p = gen.profile();
        const OperatorMatrix b = gen.op(p);
        const RegularOperator t = RegularOperator::from_matrix(b);

        const PolarDecomposition pd = polar_decompose(t);
        CHECK(max_residual(pd.residuals) < 1e-8);
        // t = V |t|: apply |t| first
        CHECK(op_norm(op_compose(pd.abs_t, pd.v) - b) < 1e-8);

        const GeneralizedInverse gi = generalized_inverse(t);
        CHECK(max_residual(gi.residuals) < 1e-8);
        CHECK(op_norm(gi.s - gi.s_alt) < 1e-8);
    }
}

TEST_CASE("theorem verdicts are all-true on bounded matrix operators") {
    InstanceGen gen(103);
    for (int it = 0; it < 15; ++it) {
        const RegularOperator t = RegularOperator::from_matrix(gen.op(gen.profile()));
        const Thm31Report rep = verify_thm31(t);
        CHECK(rep.cond_i);
        CHECK(rep.cond_ii);
        CHECK(rep.cond_iii);
        CHECK(rep.max_residual < 1e-8);
        CHECK(!rep.certificate);
    }
}

TEST_CASE("corollary residuals") {
    InstanceGen gen(107);
    for (int it = 0; it < 15; ++it) {
        const RegularOperator t = RegularOperator::from_matrix(gen.op(gen.profile()));
        CHECK(cor32_check(t) < 1e-8);
        CHECK(adjoint_polar_check(t) < 1e-8);
    }
}

TEST_CASE("closed range suites agree across backends") {
    InstanceGen gen(109);
    const ClosedRangeSuite m =
        closed_range_suite(RegularOperator::from_matrix(gen.op(gen.profile())));
    CHECK(m.range_closed);
    CHECK(m.s_bounded);
    CHECK(m.consistent);

    GradedOperator g;
    for (int n = 1; n <= 20; ++n)
        g.components.push_back(RegularOperator::from_matrix(scalar_matrix(1, 1, {1.0 / n})));
    const ClosedRangeSuite gr = closed_range_suite(g);
    CHECK(!gr.range_closed);
    CHECK(!gr.s_bounded);
    CHECK(gr.consistent);
}

TEST_CASE("graph decomposition residual for the dual construction") {
    InstanceGen gen(113);
    for (int it = 0; it < 10; ++it) {
        const OperatorMatrix b = gen.op(gen.profile());
        const RegularOperator t = RegularOperator::from_matrix(b);
        const GeneralizedInverse gi = generalized_inverse(t);
        const GeneralizedInverse gistar =
            generalized_inverse(RegularOperator::from_matrix(op_adjoint(b)));
        CHECK(graph_decomposition_check(t, gi.s, gistar.s) < 1e-8);
    }
}

TEST_CASE("zero operator edge case") {
    const OperatorMatrix z = scalar_matrix(2, 2, {0, 0, 0, 0});
    const PolarDecomposition pd = polar_decompose(RegularOperator::from_matrix(z));
    CHECK(op_norm(pd.v) < 1e-12);
    CHECK(op_norm(pd.abs_t) < 1e-12);
    const Thm31Report rep = verify_thm31(RegularOperator::from_matrix(z));
    CHECK(rep.cond_i);
    CHECK(rep.max_residual < 1e-12);
}

TEST_CASE("non-square operators decompose too") {
    const OperatorMatrix b = scalar_matrix(1, 2, {3, 4});
    const RegularOperator t = RegularOperator::from_matrix(b);
    const PolarDecomposition pd = polar_decompose(t);
    CHECK(max_residual(pd.residuals) < 1e-10);
    const GeneralizedInverse gi = generalized_inverse(t);
    CHECK(gi.s.domain_rank() == 2);
    CHECK(gi.s.codomain_rank() == 1);
    CHECK(max_residual(gi.residuals) < 1e-10);
}
