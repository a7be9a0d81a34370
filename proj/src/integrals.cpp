#include "binomid/integrals.hpp"

#include "binomid/errors.hpp"
#include "binomid/exactval.hpp"

namespace binomid {

namespace {

void check_domain(HalfInt u, HalfInt v) {
    if (u.twice <= -2 || v.twice <= -2)
        throw OutOfDomain("integral requires u > -1 and v > -1, got u=" +
                          u.str() + " v=" + v.str());
}

PiScalar to_scalar(const ExactValue& v) {
    PiValue p = v.to_pivalue();
    if (p.is_zero()) return PiScalar();
    if (!p.is_monomial()) throw NotMonomial();
    const auto& [h, c] = *p.terms().begin();
    return PiScalar(c, h);
}

}  // namespace

const char* integral_kind_name(IntegralKind k) {
    switch (k) {
        case IntegralKind::K_quarter: return "K";
        case IntegralKind::I_half_angle: return "I";
        case IntegralKind::J_full: return "J";
        case IntegralKind::CosPower: return "cospower";
        case IntegralKind::Beta01: return "beta01";
    }
    return "?";
}

PiScalar beta_K(HalfInt u, HalfInt v) {
    check_domain(u, v);
    HalfInt e = -(u + v + HalfInt::from_int(1));
    if (!e.is_integer())
        throw OffGrid("K(" + u.str() + "," + v.str() + "): half-integer power of 2");
    Rational ru = u.value(), rv = v.value();
    ExactValue val = binom_sym(ru, ru / 2) * binom_sym(rv, rv / 2) *
                     binom_sym((ru + rv) / 2, ru / 2).invert();
    ExactValue pi = ExactValue::term(SymKey{2, {}}, Rational(1));
    val = val * pi * ExactValue(pow_rational(Rational(2), e.as_int()));
    return to_scalar(val);
}

PiScalar int_I(HalfInt u, HalfInt v) {
    PiScalar k = beta_K(u, v);
    return PiScalar(k.coeff * 2, k.pihalf);
}

PiScalar int_J(long m, HalfInt v) {
    if (v.twice <= -2)
        throw OutOfDomain("J requires v > -1, got v=" + v.str());
    if (m < 0) throw OutOfDomain("J requires m >= 0");
    if (m % 2 != 0) return PiScalar();
    return int_I(HalfInt::from_int(m), v);
}

ComplexPiValue int_J_general(HalfInt u, HalfInt v) {
    check_domain(u, v);
    // 2 cos^2(pi u/2) + i sin(pi u) on the grid
    Rational re_factor;
    Rational im_factor;
    if (u.is_integer()) {
        re_factor = (u.as_int() % 2 == 0) ? Rational(2) : Rational(0);
        im_factor = 0;
    } else {
        long n = (u.twice - 1) / 2;  // u = n + 1/2, sin(pi u) = (-1)^n
        re_factor = 1;
        im_factor = ((n % 2 + 2) % 2 == 0) ? 1 : -1;
    }
    PiScalar k = beta_K(u, v);
    ComplexPiValue r;
    r.re = PiValue(PiScalar(k.coeff * re_factor, k.pihalf));
    r.im = PiValue(PiScalar(k.coeff * im_factor, k.pihalf));
    return r;
}

PiScalar beta01(HalfInt x, HalfInt y) {
    check_domain(x, y);
    Rational rx = x.value(), ry = y.value();
    ExactValue val = binom_sym(rx + ry + 1, rx + 1).invert() *
                     ExactValue(Rational(1) / (rx + 1));
    return to_scalar(val);
}

}  // namespace binomid
