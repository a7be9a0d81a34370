#ifndef BINOMID_QUADRATURE_HPP
#define BINOMID_QUADRATURE_HPP

#include <functional>

#include "binomid/bigfloat.hpp"
#include "binomid/integrals.hpp"
#include "binomid/rational.hpp"

namespace binomid {

struct QuadratureSpec {
    IntegralKind kind = IntegralKind::K_quarter;
    Rational u;  // first exponent (m for J/CosPower, x for Beta01)
    Rational v;  // second exponent (y for Beta01)
    int digits = 30;
};

struct QuadResult {
    BigFloat re;
    BigFloat im;
    bool is_complex = false;
};

// Numeric Gamma via the Spouge series, accurate to >= digits significant
// digits; reflection formula for negative non-integer arguments.
BigFloat gamma_numeric(const BigFloat& x, int digits);
BigFloat gamma_numeric(const Rational& x, int digits);

// Double-exponential (tanh-sinh) evaluation of the literal integrand of
// the given family over its literal interval. The J family with
// non-integer u uses the principal complex power on the negative arc.
// Throws NoConvergence if refinement stalls above the error target.
QuadResult integrate(const QuadratureSpec& spec);

// Generic tanh-sinh driver over [a, b]. The integrand receives the node
// together with its exact distances to both endpoints so that endpoint-
// singular factors can be evaluated at full precision.
using Integrand =
    std::function<BigFloat(const BigFloat& x, const BigFloat& dist_left,
                           const BigFloat& dist_right)>;
BigFloat tanh_sinh(const Integrand& f, const BigFloat& a, const BigFloat& b,
                   int digits);

// The closed form of each family evaluated with gamma_numeric; defined
// off the half-integer grid as well. Comparison oracle counterpart.
QuadResult closed_form_numeric(const QuadratureSpec& spec);

}  // namespace binomid

#endif
