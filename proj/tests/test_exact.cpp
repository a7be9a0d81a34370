#include "doctest.h"

#include "binomid/exactval.hpp"
#include "binomid/pivalue.hpp"

using namespace binomid;

namespace {

PiValue pv(long num, long den, long pihalf) {
    return PiValue(PiScalar(make_rational(num, den), pihalf));
}

std::vector<PiValue> samples() {
    return {PiValue::zero(),
            PiValue::one(),
            pv(-3, 2, 0),
            pv(1, 1, 1),   // sqrt(pi)
            pv(2, 7, 2),   // (2/7) pi
            pv(5, 3, -1),  // (5/3) / sqrt(pi)
            pv(1, 2, 2) + pv(-4, 1, 0),
            pv(1, 1, -2) + pv(1, 1, 1) + pv(1, 1, 4)};
}

}  // namespace

TEST_CASE("pi-graded values form a commutative ring") {
    auto xs = samples();
    for (const auto& a : xs) {
        CHECK(a + PiValue::zero() == a);
        CHECK(a * PiValue::one() == a);
        CHECK(a - a == PiValue::zero());
        CHECK(a * PiValue::zero() == PiValue::zero());
        for (const auto& b : xs) {
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            for (const auto& c : xs) {
                CHECK((a + b) + c == a + (b + c));
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
            }
        }
    }
}

TEST_CASE("canonical form stores no zero coefficients") {
    PiValue v;
    v.add_term(2, Rational(5));
    v.add_term(2, Rational(-5));
    CHECK(v.is_zero());
    CHECK(v.terms().empty());
    CHECK(v.str() == "0");

    PiValue w = pv(1, 2, 1) + pv(-1, 2, 1);
    CHECK(w == PiValue::zero());
}

TEST_CASE("monomial inversion") {
    PiValue v = pv(3, 4, 2);
    PiScalar inv = v.invert();
    CHECK(PiValue(inv) * v == PiValue::one());
    CHECK_THROWS_AS(PiValue::zero().invert(), ZeroValue);
    CHECK_THROWS_AS((pv(1, 1, 0) + pv(1, 1, 1)).invert(), NotMonomial);
}

TEST_CASE("rational extraction") {
    CHECK(PiValue(Rational(7)).as_rational() == 7);
    CHECK(PiValue::zero().as_rational() == 0);
    CHECK_THROWS_AS(pv(1, 1, 2).as_rational(), NotMonomial);
}

TEST_CASE("json round trip") {
    for (const auto& v : samples())
        CHECK(PiValue::from_json(v.to_json()) == v);
}

TEST_CASE("numeric rendering tracks the exact value") {
    // 2 pi - pi/2 = (3/2) pi
    PiValue v = pv(2, 1, 2) + pv(-1, 2, 2);
    BigFloat f = v.to_float(30);
    BigFloat want = BigFloat::pi(f.prec()) *
                    BigFloat::from_rational(make_rational(3, 2), f.prec());
    CHECK((f - want).abs().to_double() < 1e-25);
}

TEST_CASE("extended values keep residual factors symbolic") {
    ExactValue g14 = gamma_sym(make_rational(1, 4));
    CHECK(!g14.pivalue_representable());
    CHECK_THROWS_AS(g14.to_pivalue(), OffGrid);

    // reflection-free cancellation: Gamma(1/4) / Gamma(1/4) = 1
    CHECK(g14 * g14.invert() == ExactValue(Rational(1)));

    // Gamma(9/4) = (5/4)(1/4) Gamma(1/4)
    ExactValue g94 = gamma_sym(make_rational(9, 4));
    CHECK(g94 == g14 * ExactValue(make_rational(5, 16)));
}

TEST_CASE("grid values reduce to the pi grading") {
    // Gamma(5/2) = (3/4) sqrt(pi)
    ExactValue g = gamma_sym(make_rational(5, 2));
    CHECK(g.pivalue_representable());
    PiValue p = g.to_pivalue();
    CHECK(p == pv(3, 4, 1));
}

TEST_CASE("generalized binomial conventions") {
    // integer arguments follow the integer convention
    CHECK(binom_sym(Rational(5), Rational(2)) == ExactValue(Rational(10)));
    CHECK(binom_sym(Rational(3), Rational(5)).is_zero());
    CHECK(binom_sym(Rational(3), Rational(-1)).is_zero());
    // one denominator pole with finite numerator gives exact zero
    CHECK(binom_sym(make_rational(1, 2), make_rational(3, 2)).is_zero());
    // numerator pole is undefined
    CHECK_THROWS_AS(binom_sym(Rational(-2), make_rational(1, 2)), Undefined);
    // the flagship grid value: binom(1, 1/2) = 4/pi
    ExactValue b = binom_sym(Rational(1), make_rational(1, 2));
    CHECK(b.to_pivalue() == pv(4, 1, -2));
}

TEST_CASE("integer powers in the extended domain") {
    ExactValue b = binom_sym(Rational(1), make_rational(1, 2));
    CHECK(b.pow_int(2) == b * b);
    CHECK(b.pow_int(0) == ExactValue(Rational(1)));
    CHECK(b.pow_int(-1) == b.invert());
}
