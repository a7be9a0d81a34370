#include "doctest.h"

#include "binomid/special.hpp"

using namespace binomid;

namespace {
HalfInt h(long twice) { return HalfInt(twice); }
}

TEST_CASE("factorials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == Integer("2432902008176640000"));
}

TEST_CASE("exact Gamma on the half-integer grid") {
    CHECK(gamma_exact(h(2)) == PiScalar(Rational(1), 0));       // Gamma(1)
    CHECK(gamma_exact(h(8)) == PiScalar(Rational(6), 0));       // Gamma(4)
    CHECK(gamma_exact(h(1)) == PiScalar(Rational(1), 1));       // sqrt(pi)
    CHECK(gamma_exact(h(5)) == PiScalar(make_rational(3, 4), 1));  // Gamma(5/2)
    CHECK(gamma_exact(h(-1)) == PiScalar(Rational(-2), 1));     // Gamma(-1/2)
    CHECK_THROWS_AS(gamma_exact(h(0)), GammaPole);
    CHECK_THROWS_AS(gamma_exact(h(-4)), GammaPole);
}

TEST_CASE("Gamma recurrence on the grid") {
    for (long twice = -9; twice <= 12; ++twice) {
        if (twice % 2 == 0 && twice <= 0) continue;       // poles
        if (twice % 2 == 0 && twice + 2 <= 0) continue;
        PiScalar lhs = gamma_exact(h(twice + 2));
        PiScalar rhs = gamma_exact(h(twice)) *
                       PiScalar(make_rational(twice, 2), 0);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("integer binomials satisfy the Pascal recurrence") {
    for (long m = 1; m <= 64; ++m)
        for (long n = 0; n <= m; ++n)
            CHECK(binom_int(m, n) ==
                  binom_int(m - 1, n) + binom_int(m - 1, n - 1));
    CHECK(binom_int(4, 7) == 0);
    CHECK(binom_int(4, -1) == 0);
    CHECK(binom_int(10, 5) == 252);
}

TEST_CASE("generalized binomial agrees with the integer one") {
    for (long m = 0; m <= 12; ++m)
        for (long n = 0; n <= m; ++n)
            CHECK(binom_general(HalfInt::from_int(m), HalfInt::from_int(n)) ==
                  PiScalar(Rational(binom_int(m, n)), 0));
}

TEST_CASE("generalized binomial at half-integer points") {
    // binom(1, 1/2) = 4/pi
    CHECK(binom_general(h(2), h(1)) == PiScalar(Rational(4), -2));
    // binom(1/2, 1/4 + 1/4): a single denominator pole gives zero
    CHECK(binom_general(h(1), h(3)).is_zero());
    // numerator pole
    CHECK_THROWS_AS(binom_general(h(-2), h(1)), Undefined);
}

TEST_CASE("Catalan numbers") {
    long want[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
    for (long j = 0; j < 10; ++j) CHECK(catalan(j) == want[j]);
}

TEST_CASE("grid Gamma relationships hold as exact equalities") {
    GammaIdentityReport rep = check_gamma_identities(0, 24);
    for (const auto& e : rep.entries) {
        INFO(e.name << ": " << e.detail);
        CHECK(e.pass);
    }
    CHECK(rep.all_pass());
}
