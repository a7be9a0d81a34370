#ifndef BINOMID_SPECIAL_HPP
#define BINOMID_SPECIAL_HPP

#include <string>
#include <vector>

#include "binomid/halfint.hpp"
#include "binomid/pivalue.hpp"

namespace binomid {

// (n)! with memoization; cache writes are idempotent and thread-safe.
Integer factorial(long n);

// Exact Gamma on the half-integer grid. Throws GammaPole at non-positive
// integers. Integer a gives (a-1)!; half-integer a gives rational * sqrt(pi).
PiScalar gamma_exact(HalfInt a);

// Integer binomial with the m<n and n<0 conventions giving 0.
Integer binom_int(long m, long n);

// Generalized binomial Gamma(u+1)/(Gamma(v+1)Gamma(u-v+1)) on the grid.
// A pole in exactly one denominator Gamma (with finite numerator) gives
// exact 0 by the limit convention; a numerator pole throws Undefined.
PiScalar binom_general(HalfInt u, HalfInt v);

// C_j = binom(2j,j)/(j+1)
Integer catalan(long j);

struct GammaIdentityReport {
    struct Entry {
        std::string name;
        bool pass;
        std::string detail;  // first failing instance, if any
    };
    std::vector<Entry> entries;
    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
};

// Checks the four binomial-coefficient relationships and the two
// Gamma(u +- 1/2) identities as exact PiScalar equalities for integer
// r (resp. s) in [lo, hi].
GammaIdentityReport check_gamma_identities(long lo, long hi);

}  // namespace binomid

#endif
