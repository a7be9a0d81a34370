#ifndef BINOMID_EXACTVAL_HPP
#define BINOMID_EXACTVAL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "binomid/pivalue.hpp"
#include "binomid/rational.hpp"

namespace binomid {

// Symbolic part of an exact term: a power of sqrt(pi) together with
// residual Gamma factors Gamma(r)^e at rationals r in (0,1), r != 1/2.
// Gamma(1) folds into the coefficient and Gamma(1/2) into the pi grade,
// so PiValue corresponds to keys with empty residue lists.
struct SymKey {
    long pihalf = 0;
    std::vector<std::pair<Rational, long>> residues;  // sorted by residue

    friend bool operator==(const SymKey& a, const SymKey& b) {
        return a.pihalf == b.pihalf && a.residues == b.residues;
    }
    friend bool operator<(const SymKey& a, const SymKey& b) {
        if (a.pihalf != b.pihalf) return a.pihalf < b.pihalf;
        return a.residues < b.residues;
    }
};

// Exact value: finite sum of rational coefficients times symbolic parts.
// Canonical form stores no zero coefficients; empty sum is zero.
class ExactValue {
  public:
    ExactValue() = default;
    explicit ExactValue(Rational q) {
        if (q != 0) terms_[SymKey{}] = std::move(q);
    }
    static ExactValue from_piscalar(const PiScalar& s);
    static ExactValue from_pivalue(const PiValue& v);
    static ExactValue term(SymKey key, Rational coeff);

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_rational() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == SymKey{});
    }
    Rational as_rational() const;

    const std::map<SymKey, Rational>& terms() const { return terms_; }

    void add_term(const SymKey& key, const Rational& c);

    friend ExactValue operator+(const ExactValue& a, const ExactValue& b);
    friend ExactValue operator-(const ExactValue& a);
    friend ExactValue operator-(const ExactValue& a, const ExactValue& b);
    friend ExactValue operator*(const ExactValue& a, const ExactValue& b);
    friend bool operator==(const ExactValue& a, const ExactValue& b) {
        return a.terms_ == b.terms_;
    }

    ExactValue invert() const;  // monomial only
    ExactValue pow_int(long e) const;

    // Throws OffGrid if residual Gamma factors remain.
    PiValue to_pivalue() const;
    bool pivalue_representable() const;

    std::string str() const;

  private:
    std::map<SymKey, Rational> terms_;
};

// Gamma(x) for rational non-pole x, reduced so only a residue in (0,1)
// survives symbolically. Throws GammaPole at non-positive integers.
ExactValue gamma_sym(const Rational& x);

// Generalized binomial over rational arguments via gamma_sym with the
// same pole conventions as binom_general. Integer arguments use the
// integer convention (0 for bottom < 0 or bottom > top).
ExactValue binom_sym(const Rational& top, const Rational& bottom);

}  // namespace binomid

#endif
