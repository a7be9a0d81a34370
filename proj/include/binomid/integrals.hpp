#ifndef BINOMID_INTEGRALS_HPP
#define BINOMID_INTEGRALS_HPP

#include "binomid/halfint.hpp"
#include "binomid/pivalue.hpp"

namespace binomid {

// The five integral families with closed forms.
enum class IntegralKind {
    K_quarter,     // int_0^{pi/2} cos^u x sin^v x dx
    I_half_angle,  // int_0^{pi}   cos^u(x/2) sin^v(x/2) dx
    J_full,        // int_0^{pi}   cos^u x sin^v x dx
    CosPower,      // int_0^{pi}   cos^m x dx
    Beta01,        // int_0^1      (1-t)^u t^v dt
};

const char* integral_kind_name(IntegralKind k);

// K(u,v) = 2^(-u-v-1) pi binom(u,u/2) binom(v,v/2) binom((u+v)/2,u/2)^(-1).
// Exact only where all three binomials are grid-valued (integer u, v);
// throws OffGrid otherwise and OutOfDomain for u <= -1 or v <= -1.
PiScalar beta_K(HalfInt u, HalfInt v);

// I(u,v) = 2 K(u,v), symmetric in u, v.
PiScalar int_I(HalfInt u, HalfInt v);

// J(m,v): 0 for odd m, 2 K(m,v) for even m.
PiScalar int_J(long m, HalfInt v);

// J(u,v) = K(u,v) (2 cos^2(pi u/2) + i sin(pi u)); the trigonometric
// factor is exact on the grid. Throws OffGrid where K does.
ComplexPiValue int_J_general(HalfInt u, HalfInt v);

// int_0^1 (1-t)^x t^y dt = binom(x+y+1, x+1)^(-1) / (x+1); exact for all
// grid x, y > -1.
PiScalar beta01(HalfInt x, HalfInt y);

}  // namespace binomid

#endif
