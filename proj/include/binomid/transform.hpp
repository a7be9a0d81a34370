#ifndef BINOMID_TRANSFORM_HPP
#define BINOMID_TRANSFORM_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "binomid/ast.hpp"
#include "binomid/eval.hpp"

namespace binomid {

// Affine index exponent map k -> a*k + b. Affine maps cover every input
// handled here and make the parity preconditions of the cosine
// substitution decidable; non-affine maps are rejected at registration.
struct IndexMap {
    long a = 1;
    long b = 0;

    bool is_identity() const { return a == 1 && b == 0; }
};

// A polynomial identity of the shape
//
//   sum_{k=s}^{n} f(k) (1+t)^{p(k)}  =  sum_{k=m}^{r} g(k) t^{q(k)}
//
// in a formal variable t, where f and g are expressions in the summation
// index "k" and the declared parameters. Accepted only after the
// polynomial identity has been checked at t in {0, 1, -1/2} over small
// parameter samples.
struct StandardFormIdentity {
    std::string name;
    ExprPtr f, g;       // coefficient sequences, in index "k"
    IndexMap p, q;      // exponent maps
    ExprPtr s, m;       // lower bounds
    ExprPtr n, r;       // upper bounds (typically the parameter n)
    std::vector<ParamDecl> params;  // declared parameters and free vars
    Predicate validity;
    SweepRanges sample_ranges;  // small grids used for the checks
};

// A two-variable symmetric polynomial identity of the shape
//
//   sum_{k=lo}^{hi} F(k) (x y)^k (x+y)^{w(k)}
//     = sum_{k=jlo}^{jhi} G(k) x^{xe(k)} y^{ye(k)}
//
// (e.g. the power-sum expansions, which mix x and y in a way the
// standard form cannot express). Drives the sine substitutions directly.
struct SymmetricXYIdentity {
    std::string name;
    ExprPtr F;          // in index "k"
    ExprPtr wexp;       // (x+y) exponent, in "k"
    ExprPtr k_lo, k_hi;
    ExprPtr G;          // in index "k"
    ExprPtr xe, ye;     // x and y exponents, in "k"
    ExprPtr j_lo, j_hi;
    std::vector<ParamDecl> params;
    Predicate validity;
    SweepRanges sample_ranges;
};

struct TransformError : Error {
    explicit TransformError(const std::string& m) : Error(m) {}
};

// Validated constructors: check the defining polynomial identity at
// t in {0, 1, -1/2} (resp. sample (x, y) pairs) over the sample ranges
// and throw TransformError with diagnostics on failure.
StandardFormIdentity register_standard_form(StandardFormIdentity sf);
SymmetricXYIdentity register_symmetric_form(SymmetricXYIdentity sym);

// The built-in inputs: "binomial", "binomial-x", "simons" as standard
// forms; "waring", "waring-dual" as symmetric forms.
const std::vector<StandardFormIdentity>& standard_forms();
const std::vector<SymmetricXYIdentity>& symmetric_forms();
const StandardFormIdentity& standard_form(const std::string& name);
const SymmetricXYIdentity& symmetric_form(const std::string& name);

// Grid arguments: a concrete half-grid value, or absent, in which case
// the emitted identity declares the letter as a new grid parameter.
using GridArg = std::optional<Rational>;

// The Beta-kernel transform: multiply by t^u (1-t)^v and integrate over
// [0, 1]. Emits the simplified particular form when u = v = 0.
Identity t_beta01(const StandardFormIdentity& sf, const GridArg& u,
                  const GridArg& v);

// The t = y/x homogenization followed by the quarter-period sine/cosine
// substitution; emits the (forward, mirrored) pair. Domain constraints
// that involve the running index become validity clauses checked per
// binding, so inadmissible bindings surface as Skipped during sweeps.
std::pair<Identity, Identity> t_xy_pair(const StandardFormIdentity& sf,
                                        const GridArg& u, const GridArg& v);

// Same homogenization applied to a symmetric two-variable identity
// (x -> cos^2 t, y -> sin^2 t over [0, pi/2]).
Identity t_xy_pair(const SymmetricXYIdentity& sym, const GridArg& v);

// Set y = -1 in the homogenized form, multiply by (1-x)^v, integrate
// over [0, 1].
Identity t_y_minus1(const StandardFormIdentity& sf, const GridArg& u,
                    const GridArg& v);

// Write -sin^2 t for t, multiply by cos^u t sin^v t, integrate over
// [0, pi/2]. Emits the central-binomial particular when u = v = 0.
Identity t_sin_sub(const StandardFormIdentity& sf, const GridArg& u,
                   const GridArg& v);

enum class ParitySide { ForwardOnQ, ReverseOnP };

// Set t = cos x, multiply by sin^v x, integrate over [0, pi]. Terms on
// the power side survive only when their exponent is even, so the output
// re-indexes that side by the parity structure of the affine map.
Identity t_cos_parity(const StandardFormIdentity& sf, const GridArg& v,
                      ParitySide side);

// The p = q = identity specialization of the cosine substitution,
// emitted as the (forward, mirrored) pair. Throws ShapeMismatch unless
// both exponent maps are the identity.
std::pair<Identity, Identity> t_power_form(const StandardFormIdentity& sf,
                                           const GridArg& v);

// Half-angle sine substitution on a symmetric identity: x -> cos^2(t/2),
// y -> sin^2(t/2), multiply by sin^v t, integrate over [0, pi].
Identity t_sym_sin(const SymmetricXYIdentity& sym, const GridArg& v);

// Extensional equality of two identities over the given ranges: every
// admissible binding must make both pairs of sides exactly equal.
bool extensionally_equal(const Identity& a, const Identity& b,
                         const SweepRanges& ranges);

}  // namespace binomid

#endif
