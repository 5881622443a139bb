#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polarmod/polar.hpp"

using namespace polarmod;

namespace {

Domain1D unit() { return Domain1D({{Rational(0), Rational(1)}}); }
Domain1D two_comp() { return Domain1D({{Rational(0), Rational(1)}, {Rational(2), Rational(3)}}); }

PwRational constant(const Domain1D& d, const Rational& v) {
    return PwRational::constant(d, CRational(v));
}

DiagOperator mult_x() { return DiagOperator(unit(), {PwRational::coordinate(unit())}); }

DiagOperator mult_x_minus_2() {
    return DiagOperator(unit(), {PwRational::coordinate(unit()) - constant(unit(), 2)});
}

DiagOperator projection_case() {
    std::vector<std::vector<PwRational::Piece>> pieces = {
        {{Rational(0), Rational(1), RatPoly(), RatPoly::constant(CRational(Rational(1)))}},
        {{Rational(2), Rational(3), RatPoly::constant(CRational(Rational(1))),
          RatPoly::constant(CRational(Rational(1)))}}};
    return DiagOperator(two_comp(), {PwRational(two_comp(), pieces)});
}

}  // namespace

TEST_CASE("complement check certificates") {
    const ComplementReport bad = diag_complement_check(mult_x());
    CHECK(!bad.complemented);
    CHECK(*bad.failing_entry == 0);
    CHECK(*bad.certificate == Rational(0));

    CHECK(diag_complement_check(mult_x_minus_2()).complemented);
    CHECK(diag_complement_check(projection_case()).complemented);
}

TEST_CASE("exact polar decomposition of x - 2") {
    const DiagOperator t = mult_x_minus_2();
    const DiagPolar pd = diag_polar(t);
    CHECK(pd.v.entries[0] == constant(unit(), -1));
    CHECK(pd.abs_t.entries[0] == constant(unit(), 2) - PwRational::coordinate(unit()));
    // T = V |T| with zero residual
    CHECK(diag_equal(diag_compose(pd.abs_t, pd.v), t));

    const DiagOperator s = diag_pinv(t);
    CHECK(diag_equal(diag_compose(diag_compose(s, t), s), s));
    CHECK(diag_equal(diag_compose(diag_compose(t, s), t), t));
    // s is multiplication by 1/(x-2)
    CHECK(s.entries[0].eval(Rational(0)) == CRational(Rational(-1, 2)));
}

TEST_CASE("projection case: V and s are the indicator") {
    const DiagOperator t = projection_case();
    const DiagPolar pd = diag_polar(t);
    CHECK(diag_equal(pd.v, t));
    CHECK(diag_equal(diag_pinv(t), t));
    CHECK(diag_equal(pd.abs_t, t));
}

TEST_CASE("coordinate function is rejected with certificate zero") {
    CHECK_THROWS_AS(diag_polar(mult_x()), NotComplemented);
    try {
        diag_pinv(mult_x());
        FAIL("expected NotComplemented");
    } catch (const NotComplemented& e) {
        CHECK(e.certificate == "0");
    }
}

TEST_CASE("exact theorem verdicts are a dichotomy") {
    const DiagThm31Report neg = verify_thm31(mult_x());
    CHECK(!neg.cond_i);
    CHECK(!neg.cond_ii);
    CHECK(!neg.cond_iii);
    CHECK(*neg.certificate == "0");
    CHECK(!neg.polar);

    const DiagThm31Report pos = verify_thm31(mult_x_minus_2());
    CHECK(pos.cond_i);
    CHECK(pos.cond_ii);
    CHECK(pos.cond_iii);
    CHECK(pos.exact);
    REQUIRE(pos.polar);
    REQUIRE(pos.pinv);
}

TEST_CASE("closed range suite is consistent on both branches") {
    const ClosedRangeSuite a = closed_range_suite(mult_x());
    CHECK(!a.range_closed);
    CHECK(!a.s_bounded);
    CHECK(a.consistent);

    const ClosedRangeSuite b = closed_range_suite(mult_x_minus_2());
    CHECK(b.range_closed);
    CHECK(b.s_bounded);
    CHECK(b.consistent);

    const ClosedRangeSuite c = closed_range_suite(projection_case());
    CHECK(c.range_closed);
    CHECK(c.consistent);
}

TEST_CASE("rank-2 diagonal operators and star") {
    const DiagOperator t(unit(), {PwRational::coordinate(unit()) - constant(unit(), 2),
                                  constant(unit(), 3)});
    const DiagPolar pd = diag_polar(t);
    CHECK(pd.v.entries[1] == constant(unit(), 1));
    CHECK(diag_equal(diag_star(t), t));  // real entries: selfadjoint

    // one bad entry poisons the whole operator
    const DiagOperator mixed(unit(), {PwRational::coordinate(unit()), constant(unit(), 3)});
    const ComplementReport rep = diag_complement_check(mixed);
    CHECK(!rep.complemented);
    CHECK(*rep.failing_entry == 0);
}

TEST_CASE("complex entries are fine for arithmetic but rejected by polar") {
    const DiagOperator c(unit(),
                         {PwRational::constant(unit(), CRational(Rational(0), Rational(1)))});
    CHECK(!c.is_real());
    CHECK_THROWS_AS(diag_polar(c), SchemaError);
}
