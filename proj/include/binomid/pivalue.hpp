#ifndef BINOMID_PIVALUE_HPP
#define BINOMID_PIVALUE_HPP

#include <map>
#include <string>

#include "binomid/bigfloat.hpp"
#include "binomid/errors.hpp"
#include "binomid/rational.hpp"

namespace binomid {

// A single exact term coeff * pi^(pihalf/2). The canonical zero is
// (0, pihalf = 0).
struct PiScalar {
    Rational coeff;
    long pihalf = 0;

    PiScalar() : coeff(0) {}
    PiScalar(Rational c, long h) : coeff(std::move(c)), pihalf(h) {
        if (coeff == 0) pihalf = 0;
    }
    static PiScalar from_rational(Rational q) { return PiScalar(std::move(q), 0); }

    bool is_zero() const { return coeff == 0; }
    PiScalar inverse() const {
        if (coeff == 0) throw ZeroValue();
        return PiScalar(Rational(1) / coeff, -pihalf);
    }
    friend PiScalar operator*(const PiScalar& a, const PiScalar& b) {
        return PiScalar(a.coeff * b.coeff, a.pihalf + b.pihalf);
    }
    friend PiScalar operator/(const PiScalar& a, const PiScalar& b) {
        return a * b.inverse();
    }
    friend bool operator==(const PiScalar& a, const PiScalar& b) {
        return a.coeff == b.coeff && (a.coeff == 0 || a.pihalf == b.pihalf);
    }
    std::string str() const;
};

// A finite sum of rational multiples of half-integer powers of pi.
// Invariant: no stored coefficient is zero; the empty map is zero.
class PiValue {
  public:
    PiValue() = default;
    PiValue(const PiScalar& s) {  // NOLINT: intentional implicit lift
        if (!s.is_zero()) terms_[s.pihalf] = s.coeff;
    }
    explicit PiValue(Rational q) {
        if (q != 0) terms_[0] = std::move(q);
    }
    static PiValue zero() { return PiValue(); }
    static PiValue one() { return PiValue(Rational(1)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }
    Rational as_rational() const {
        if (terms_.empty()) return Rational(0);
        if (!is_rational()) throw NotMonomial();
        return terms_.begin()->second;
    }
    const std::map<long, Rational>& terms() const { return terms_; }

    void add_term(long pihalf, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(pihalf, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend PiValue operator+(const PiValue& a, const PiValue& b);
    friend PiValue operator-(const PiValue& a, const PiValue& b);
    friend PiValue operator-(const PiValue& a);
    friend PiValue operator*(const PiValue& a, const PiValue& b);
    friend bool operator==(const PiValue& a, const PiValue& b) {
        return a.terms_ == b.terms_;
    }

    // Reciprocal of a single-term value.
    PiScalar invert() const;

    // Relative error bounded by 10^(1-digits).
    BigFloat to_float(int digits) const;

    std::string str() const;
    std::string to_json() const;
    static PiValue from_json(const std::string& text);

  private:
    std::map<long, Rational> terms_;
};

struct ComplexPiValue {
    PiValue re;
    PiValue im;
    friend bool operator==(const ComplexPiValue&, const ComplexPiValue&) = default;
};

}  // namespace binomid

#endif
