#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polarmod/hilbmod.hpp"
#include "polarmod/random_gen.hpp"

using namespace polarmod;

TEST_CASE("inner product hermitian symmetry and positivity") {
    InstanceGen gen(2);
    for (int it = 0; it < 10; ++it) {
        const BlockProfile p = gen.profile();
        const std::size_t k = 1 + gen.index(3);
        const ModuleVector x = gen.vector(p, k);
        const ModuleVector y = gen.vector(p, k);
        CHECK(alg_norm(inner_product(x, y) - alg_star(inner_product(y, x))) < 1e-12);
        CHECK(is_positive(inner_product(x, x)));
    }
}

TEST_CASE("adjoint moves across the inner product") {
    InstanceGen gen(7);
    for (int it = 0; it < 10; ++it) {
        const BlockProfile p = gen.profile();
        const std::size_t k = 1 + gen.index(3), m = 1 + gen.index(3);
        const OperatorMatrix b = gen.op(p, k, m);
        const ModuleVector x = gen.vector(p, k);
        const ModuleVector y = gen.vector(p, m);
        const AlgElement lhs = inner_product(op_apply(b, x), y);
        const AlgElement rhs = inner_product(x, op_apply(op_adjoint(b), y));
        CHECK(alg_norm(lhs - rhs) < 1e-10);
    }
}

TEST_CASE("composition matches sequential application") {
    InstanceGen gen(13);
    const BlockProfile p({1, 2});
    const OperatorMatrix first = gen.op(p, 2, 3);
    const OperatorMatrix second = gen.op(p, 3, 2);
    const OperatorMatrix both = op_compose(first, second);
    const ModuleVector x = gen.vector(p, 2);
    const ModuleVector direct = op_apply(both, x);
    const ModuleVector stepped = op_apply(second, op_apply(first, x));
    for (std::size_t j = 0; j < direct.rank(); ++j)
        CHECK(alg_norm(direct.entry(j) - stepped.entry(j)) < 1e-12);
}

TEST_CASE("operator norm of a diagonal operator") {
    const BlockProfile p({1});
    CMat three(1, 1), four(1, 1), zero(1, 1);
    three(0, 0) = 3;
    four(0, 0) = 4;
    const OperatorMatrix d(p, 2, 2,
                           {AlgElement(p, {three}), AlgElement(p, {zero}),
                            AlgElement(p, {zero}), AlgElement(p, {four})});
    CHECK(op_norm(d) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(op_is_hermitian(d, 1e-12));
}

TEST_CASE("absolute value squares to t*t") {
    InstanceGen gen(21);
    for (int it = 0; it < 10; ++it) {
        const BlockProfile p = gen.profile();
        const OperatorMatrix b = gen.op(p);
        const OperatorMatrix a = abs_op(b);
        // t*t applies t then t*, so its matrix is  mat(t) mat(t*)
        const OperatorMatrix tstar_t = op_compose(b, op_adjoint(b));
        CHECK(op_norm(op_compose(a, a) - tstar_t) < 1e-9);
        CHECK(op_is_hermitian(a, 1e-9));
    }
}

TEST_CASE("range and kernel projections decompose both modules") {
    InstanceGen gen(31);
    for (int it = 0; it < 10; ++it) {
        const BlockProfile p = gen.profile();
        const OperatorMatrix b = gen.op(p);
        const OperatorMatrix bstar = op_adjoint(b);
        const OperatorMatrix pr = range_projection(b);
        const OperatorMatrix pk = kernel_projection(b);
        CHECK(op_norm(op_compose(pr, pr) - pr) < 1e-10);
        CHECK(op_norm(op_compose(pk, pk) - pk) < 1e-10);
        CHECK(op_is_hermitian(pr, 1e-10));
        // ker t  (+)  cl ran t*  =  domain module
        const OperatorMatrix idE = OperatorMatrix::identity(p, b.domain_rank());
        CHECK(op_norm(pk + range_projection(bstar) - idE) < 1e-9);
        // t restricted to its kernel vanishes
        CHECK(op_norm(op_compose(pk, b)) < 1e-9);
    }
}

TEST_CASE("submodule span and decomposition") {
    InstanceGen gen(41);
    const BlockProfile p({2});
    const std::size_t rank = 2;
    const ModuleVector x = gen.vector(p, rank);
    const Submodule s = Submodule::span({x}, rank);
    const auto [proj, comp] = decompose(rank, s);
    CHECK(op_norm(proj + comp - OperatorMatrix::identity(p, rank)) < 1e-10);
    CHECK(op_norm(op_compose(proj, comp)) < 1e-10);
    // the generator lies in the submodule
    const ModuleVector px = op_apply(proj, x);
    for (std::size_t j = 0; j < rank; ++j)
        CHECK(alg_norm(px.entry(j) - x.entry(j)) < 1e-9);

    CHECK(Submodule::whole(p, rank).basis(0).rows() == rank * 2);
    CHECK(Submodule::trivial(p, rank).basis(0).rows() == 0);
}

TEST_CASE("profile mismatches are rejected") {
    InstanceGen gen(1);
    const OperatorMatrix a = gen.op(BlockProfile({1}), 2, 2);
    const OperatorMatrix b = gen.op(BlockProfile({2}), 2, 2);
    CHECK_THROWS_AS(a + b, ProfileMismatch);
    const OperatorMatrix c = gen.op(BlockProfile({1}), 3, 2);
    CHECK_THROWS_AS(op_compose(a, c), ShapeMismatch);
}
