#include "doctest.h"

#include "binomid/quadrature.hpp"
#include "binomid/special.hpp"

using namespace binomid;

namespace {

double rel_diff(const BigFloat& a, const BigFloat& b) {
    BigFloat scale = a.abs() + b.abs() + BigFloat::from_long(1, a.prec());
    return ((a - b).abs() / scale).to_double();
}

}  // namespace

TEST_CASE("numeric Gamma matches the exact grid values") {
    const int digits = 30;
    mpfr_prec_t prec = BigFloat::bits_for_digits(digits);
    for (long twice = 1; twice <= 15; ++twice) {
        PiScalar exact = gamma_exact(HalfInt(twice));
        BigFloat want = BigFloat::from_rational(exact.coeff, prec) *
                        BigFloat::pi(prec)
                            .pow(BigFloat::from_rational(
                                make_rational(exact.pihalf, 2), prec));
        BigFloat got = gamma_numeric(make_rational(twice, 2), digits);
        CHECK(rel_diff(got, want) < 1e-28);
    }
}

TEST_CASE("numeric Gamma reflection below zero") {
    // Gamma(-1/2) = -2 sqrt(pi)
    const int digits = 30;
    mpfr_prec_t prec = BigFloat::bits_for_digits(digits);
    BigFloat got = gamma_numeric(make_rational(-1, 2), digits);
    BigFloat want = -BigFloat::from_long(2, prec) * BigFloat::pi(prec).sqrt();
    CHECK(rel_diff(got, want) < 1e-28);
}

TEST_CASE("tanh-sinh handles endpoint singularities") {
    const int digits = 30;
    mpfr_prec_t prec = BigFloat::bits_for_digits(digits);
    // int_0^1 t^{-1/2} dt = 2
    BigFloat got = tanh_sinh(
        [&](const BigFloat&, const BigFloat& dl, const BigFloat&) {
            return BigFloat::from_long(1, dl.prec()) / dl.sqrt();
        },
        BigFloat(prec), BigFloat::from_long(1, prec), digits);
    CHECK(rel_diff(got, BigFloat::from_long(2, prec)) < 1e-27);
}

TEST_CASE("literal integrals agree with the closed forms") {
    const int digits = 25;
    struct Probe {
        IntegralKind kind;
        Rational u, v;
    } probes[] = {
        {IntegralKind::K_quarter, Rational(0), Rational(0)},
        {IntegralKind::K_quarter, make_rational(1, 2), make_rational(3, 2)},
        {IntegralKind::K_quarter, make_rational(-1, 2), Rational(2)},
        {IntegralKind::I_half_angle, Rational(1), make_rational(1, 2)},
        {IntegralKind::J_full, Rational(2), make_rational(3, 2)},
        {IntegralKind::J_full, Rational(3), Rational(1)},
        {IntegralKind::Beta01, make_rational(1, 2), make_rational(1, 2)},
        {IntegralKind::Beta01, make_rational(-1, 2), Rational(3)},
    };
    for (const auto& p : probes) {
        QuadratureSpec spec{p.kind, p.u, p.v, digits};
        QuadResult got = integrate(spec);
        QuadResult want = closed_form_numeric(spec);
        INFO(integral_kind_name(p.kind) << " u=" << rational_str(p.u)
                                        << " v=" << rational_str(p.v));
        CHECK(rel_diff(got.re, want.re) < 1e-21);
        CHECK(rel_diff(got.im, want.im) < 1e-21);
    }
}
