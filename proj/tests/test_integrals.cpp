#include "doctest.h"

#include "binomid/integrals.hpp"

using namespace binomid;

namespace {
HalfInt h(long twice) { return HalfInt(twice); }
}

TEST_CASE("quarter-period cosine-sine integral") {
    // K(0,0) = pi/2, K(1,1) = 1/2, K(2,0) = pi/4
    CHECK(beta_K(h(0), h(0)) == PiScalar(make_rational(1, 2), 2));
    CHECK(beta_K(h(2), h(2)) == PiScalar(make_rational(1, 2), 0));
    CHECK(beta_K(h(4), h(0)) == PiScalar(make_rational(1, 4), 2));
    // symmetry
    for (long u = 0; u <= 8; u += 2)
        for (long v = 0; v <= 8; v += 2)
            CHECK(beta_K(h(u), h(v)) == beta_K(h(v), h(u)));
}

TEST_CASE("domain and grid guards") {
    CHECK_THROWS_AS(beta_K(h(-2), h(0)), OutOfDomain);
    CHECK_THROWS_AS(beta_K(h(0), h(-3)), OutOfDomain);
    // odd half-integer exponents leave the pi grading
    CHECK_THROWS_AS(beta_K(h(1), h(0)), OffGrid);
}

TEST_CASE("half-angle integral doubles the quarter-period one") {
    for (long u = 0; u <= 6; u += 2)
        for (long v = 0; v <= 6; v += 2) {
            PiScalar two_k = beta_K(h(u), h(v)) * PiScalar(Rational(2), 0);
            CHECK(int_I(h(u), h(v)) == two_k);
            CHECK(int_I(h(u), h(v)) == int_I(h(v), h(u)));
        }
}

TEST_CASE("full-period integral vanishes at odd cosine powers") {
    for (long m = 1; m <= 9; m += 2) CHECK(int_J(m, h(2)).is_zero());
    for (long m = 0; m <= 8; m += 2)
        CHECK(int_J(m, h(2)) ==
              beta_K(HalfInt::from_int(m), h(2)) * PiScalar(Rational(2), 0));
}

TEST_CASE("general full-period integral extends the integer case") {
    for (long m = 0; m <= 6; ++m) {
        ComplexPiValue z = int_J_general(HalfInt::from_int(m), h(2));
        CHECK(z.im.is_zero());
        CHECK(z.re == PiValue(int_J(m, h(2))));
    }
    // non-integer u leaves the exact grading (quarter residues); the
    // comparison there is numeric (see the quadrature cross-checks)
    CHECK_THROWS_AS(int_J_general(h(1), h(4)), OffGrid);
}

TEST_CASE("unit-interval beta values") {
    // int_0^1 (1-t)^x t^y dt at small integer points
    CHECK(beta01(h(0), h(0)) == PiScalar(Rational(1), 0));
    CHECK(beta01(h(2), h(0)) == PiScalar(make_rational(1, 2), 0));
    CHECK(beta01(h(2), h(2)) == PiScalar(make_rational(1, 6), 0));
    CHECK(beta01(h(4), h(2)) == PiScalar(make_rational(1, 12), 0));
    // half-grid: int (1-t)^{1/2} t^{1/2} = pi/8
    CHECK(beta01(h(1), h(1)) == PiScalar(make_rational(1, 8), 2));
    CHECK_THROWS_AS(beta01(h(-2), h(0)), OutOfDomain);
}
