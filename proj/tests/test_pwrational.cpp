#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polarmod/pwrational.hpp"

using namespace polarmod;

namespace {

Domain1D unit() { return Domain1D({{Rational(0), Rational(1)}}); }
Domain1D two_comp() { return Domain1D({{Rational(0), Rational(1)}, {Rational(2), Rational(3)}}); }

PwRational constant(const Domain1D& d, int v) {
    return PwRational::constant(d, CRational(Rational(v)));
}

}  // namespace

TEST_CASE("domain validation") {
    CHECK_THROWS_AS(Domain1D({{Rational(1), Rational(0)}}), SchemaError);
    CHECK_THROWS_AS(Domain1D({{Rational(0), Rational(2)}, {Rational(1), Rational(3)}}),
                    SchemaError);
}

TEST_CASE("construction and evaluation") {
    const PwRational x = PwRational::coordinate(unit());
    CHECK(x.eval(Rational(1, 2)) == CRational(Rational(1, 2)));
    const PwRational f = x * x - constant(unit(), 2);
    CHECK(f.eval(Rational(1)) == CRational(Rational(-1)));
    CHECK(f.is_real());
}

TEST_CASE("piecewise continuity is enforced") {
    // |x - 1/2| split at 1/2: fine
    std::vector<PwRational::Piece> ok = {
        {Rational(0), Rational(1, 2),
         RatPoly({CRational(Rational(1, 2)), CRational(Rational(-1))}),
         RatPoly::constant(CRational(Rational(1)))},
        {Rational(1, 2), Rational(1),
         RatPoly({CRational(Rational(-1, 2)), CRational(Rational(1))}),
         RatPoly::constant(CRational(Rational(1)))}};
    CHECK_NOTHROW(PwRational(unit(), {ok}));

    // jump at 1/2: rejected
    std::vector<PwRational::Piece> bad = ok;
    bad[1].num = RatPoly::constant(CRational(Rational(5)));
    CHECK_THROWS_AS(PwRational(unit(), {bad}), SchemaError);
}

TEST_CASE("denominator roots on a piece are rejected") {
    // 1/(x - 1/2) on [0,1]
    CHECK_THROWS_AS(
        PwRational::from_fraction(unit(), RatPoly::constant(CRational(Rational(1))),
                                  RatPoly({CRational(Rational(-1, 2)), CRational(Rational(1))})),
        SchemaError);
    // 1/(x+1) is fine and multiplies back to 1
    const PwRational g = PwRational::from_fraction(
        unit(), RatPoly::constant(CRational(Rational(1))),
        RatPoly({CRational(Rational(1)), CRational(Rational(1))}));
    const PwRational xp1 = PwRational::coordinate(unit()) + constant(unit(), 1);
    CHECK(g * xp1 == constant(unit(), 1));
}

TEST_CASE("zero set of the coordinate function") {
    const ZeroSet z = zero_set(PwRational::coordinate(unit()));
    REQUIRE(z.parts.size() == 1);
    CHECK(z.parts[0].intervals.empty());
    REQUIRE(z.parts[0].points.size() == 1);
    CHECK(z.parts[0].points[0] == Rational(0));

    const ClopenVerdict v = is_clopen(z, unit());
    CHECK(!v.clopen);
    CHECK(*v.certificate == Rational(0));
}

TEST_CASE("zero set of x - 2 on the unit interval is empty") {
    const PwRational f = PwRational::coordinate(unit()) - constant(unit(), 2);
    const ZeroSet z = zero_set(f);
    CHECK(z.parts[0].intervals.empty());
    CHECK(z.parts[0].points.empty());
    CHECK(is_clopen(z, unit()).clopen);
}

TEST_CASE("whole-component zero sets are clopen") {
    // zero on [0,1], one on [2,3]
    std::vector<std::vector<PwRational::Piece>> pieces = {
        {{Rational(0), Rational(1), RatPoly(), RatPoly::constant(CRational(Rational(1)))}},
        {{Rational(2), Rational(3), RatPoly::constant(CRational(Rational(1))),
          RatPoly::constant(CRational(Rational(1)))}}};
    const PwRational f(two_comp(), pieces);
    CHECK(f.component_is_zero(0));
    CHECK(!f.component_is_zero(1));
    const ZeroSet z = zero_set(f);
    REQUIRE(z.parts[0].intervals.size() == 1);
    CHECK(z.parts[0].intervals[0].lo == Rational(0));
    CHECK(z.parts[0].intervals[0].hi == Rational(1));
    CHECK(is_clopen(z, two_comp()).clopen);
}

TEST_CASE("interior zero plateau is not clopen") {
    // f = 0 on [0,1/2], x - 1/2 on [1/2,1]
    std::vector<PwRational::Piece> pieces = {
        {Rational(0), Rational(1, 2), RatPoly(), RatPoly::constant(CRational(Rational(1)))},
        {Rational(1, 2), Rational(1),
         RatPoly({CRational(Rational(-1, 2)), CRational(Rational(1))}),
         RatPoly::constant(CRational(Rational(1)))}};
    const PwRational f(unit(), {pieces});
    const ZeroSet z = zero_set(f);
    REQUIRE(z.parts[0].intervals.size() == 1);
    const ClopenVerdict v = is_clopen(z, unit());
    CHECK(!v.clopen);
    CHECK(*v.certificate == Rational(1, 2));
}

TEST_CASE("irrational roots are refused, not approximated") {
    const Domain1D d({{Rational(0), Rational(2)}});
    const PwRational f =
        PwRational::coordinate(d) * PwRational::coordinate(d) - constant(d, 2);
    CHECK_THROWS_AS(zero_set(f), UnsupportedIrrationalRoot);
}

TEST_CASE("absolute value splits at sign changes") {
    const PwRational f = PwRational::coordinate(unit()) -
                         PwRational::constant(unit(), CRational(Rational(1, 2)));
    const PwRational a = pw_abs(f);
    CHECK(a.eval(Rational(0)) == CRational(Rational(1, 2)));
    CHECK(a.eval(Rational(1)) == CRational(Rational(1, 2)));
    CHECK(a.eval(Rational(1, 2)) == CRational(Rational(0)));
    CHECK(a * a == f * f);
}

TEST_CASE("sign and reciprocal on the support") {
    const PwRational f = PwRational::coordinate(unit()) - constant(unit(), 2);  // negative
    const PwRational s = pw_sign_support(f);
    CHECK(s == constant(unit(), -1));
    const PwRational r = pw_recip_support(f);
    CHECK(r * f == constant(unit(), 1));

    CHECK_THROWS_AS(pw_sign_support(PwRational::coordinate(unit())), NotComplemented);
}

TEST_CASE("conjugation and star") {
    const PwRational c = PwRational::constant(unit(), CRational(Rational(1), Rational(2)));
    const PwRational cc = pw_star(c);
    CHECK(cc.eval(Rational(0)) == CRational(Rational(1), Rational(-2)));
    CHECK((c * cc).is_real());
}
