#include "binomid/exactval.hpp"

#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "binomid/errors.hpp"
#include "binomid/special.hpp"

namespace binomid {

namespace {

struct Reduced {
    Rational coeff;
    Rational residue;  // in (0,1]; 1 means no symbolic factor
};

std::shared_mutex gamma_cache_mutex;
std::map<Rational, Reduced> gamma_cache;

// Gamma(x) = coeff * Gamma(residue) with residue in (0,1].
Reduced reduce_gamma(const Rational& x) {
    if (is_integer(x)) {
        if (x <= 0) throw GammaPole(rational_str(x));
        return {Rational(factorial(to_long(x) - 1)), Rational(1)};
    }
    {
        std::shared_lock lock(gamma_cache_mutex);
        auto it = gamma_cache.find(x);
        if (it != gamma_cache.end()) return it->second;
    }
    Rational r = x - Rational(rational_floor(x));
    Rational coeff(1);
    if (x > r) {
        for (Rational z = x - 1; z >= r; z -= 1) coeff *= z;
    } else if (x < r) {
        for (Rational z = x; z < r; z += 1) coeff /= z;
    }
    Reduced red{coeff, r};
    {
        std::unique_lock lock(gamma_cache_mutex);
        gamma_cache.emplace(x, red);
    }
    return red;
}

bool gamma_pole_at(const Rational& x) { return is_integer(x) && x <= 0; }

void mul_residue(SymKey& key, const Rational& r, long e) {
    if (e == 0) return;
    auto it = key.residues.begin();
    while (it != key.residues.end() && it->first < r) ++it;
    if (it != key.residues.end() && it->first == r) {
        it->second += e;
        if (it->second == 0) key.residues.erase(it);
    } else {
        key.residues.insert(it, {r, e});
    }
}

}  // namespace

ExactValue ExactValue::from_piscalar(const PiScalar& s) {
    ExactValue v;
    if (!s.is_zero()) v.terms_[SymKey{s.pihalf, {}}] = s.coeff;
    return v;
}

ExactValue ExactValue::from_pivalue(const PiValue& p) {
    ExactValue v;
    for (const auto& [h, c] : p.terms()) v.terms_[SymKey{h, {}}] = c;
    return v;
}

ExactValue ExactValue::term(SymKey key, Rational coeff) {
    ExactValue v;
    if (coeff != 0) v.terms_[std::move(key)] = std::move(coeff);
    return v;
}

Rational ExactValue::as_rational() const {
    if (terms_.empty()) return Rational(0);
    if (!is_rational()) throw NotMonomial();
    return terms_.begin()->second;
}

void ExactValue::add_term(const SymKey& key, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ExactValue operator+(const ExactValue& a, const ExactValue& b) {
    ExactValue r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k, c);
    return r;
}

ExactValue operator-(const ExactValue& a) {
    ExactValue r;
    for (const auto& [k, c] : a.terms_) r.terms_[k] = -c;
    return r;
}

ExactValue operator-(const ExactValue& a, const ExactValue& b) {
    return a + (-b);
}

ExactValue operator*(const ExactValue& a, const ExactValue& b) {
    ExactValue r;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            SymKey k = ka;
            k.pihalf += kb.pihalf;
            for (const auto& [res, e] : kb.residues) mul_residue(k, res, e);
            r.add_term(k, ca * cb);
        }
    }
    return r;
}

ExactValue ExactValue::invert() const {
    if (terms_.empty()) throw ZeroValue();
    if (terms_.size() > 1) throw NotMonomial();
    const auto& [k, c] = *terms_.begin();
    SymKey ik;
    ik.pihalf = -k.pihalf;
    for (const auto& [res, e] : k.residues) ik.residues.push_back({res, -e});
    return term(std::move(ik), Rational(1) / c);
}

ExactValue ExactValue::pow_int(long e) const {
    if (e == 0) return ExactValue(Rational(1));  // 0^0 = 1 by convention
    if (is_zero()) {
        if (e > 0) return ExactValue();
        throw ZeroValue("negative power of exact zero");
    }
    ExactValue base = e < 0 ? invert() : *this;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    ExactValue acc(Rational(1));
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

bool ExactValue::pivalue_representable() const {
    for (const auto& [k, c] : terms_)
        if (!k.residues.empty()) return false;
    return true;
}

PiValue ExactValue::to_pivalue() const {
    PiValue v;
    for (const auto& [k, c] : terms_) {
        if (!k.residues.empty()) throw OffGrid(str());
        v.add_term(k.pihalf, c);
    }
    return v;
}

std::string ExactValue::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rational_str(c);
        if (k.pihalf != 0) os << "*pi^(" << k.pihalf << "/2)";
        for (const auto& [res, e] : k.residues) {
            os << "*G(" << rational_str(res) << ")";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

ExactValue gamma_sym(const Rational& x) {
    Reduced red = reduce_gamma(x);
    SymKey key;
    if (red.residue == Rational(1, 2)) {
        key.pihalf = 1;
    } else if (red.residue != 1) {
        key.residues.push_back({red.residue, 1});
    }
    return ExactValue::term(std::move(key), red.coeff);
}

ExactValue binom_sym(const Rational& top, const Rational& bottom) {
    if (is_integer(top) && is_integer(bottom)) {
        long t = to_long(top);
        if (t >= 0) return ExactValue(Rational(binom_int(t, to_long(bottom))));
        throw Undefined("binom(" + rational_str(top) + "," +
                        rational_str(bottom) + "): numerator Gamma pole");
    }
    if (gamma_pole_at(top + 1))
        throw Undefined("binom(" + rational_str(top) + "," +
                        rational_str(bottom) + "): numerator Gamma pole");
    if (gamma_pole_at(bottom + 1) || gamma_pole_at(top - bottom + 1))
        return ExactValue();  // limit convention
    return gamma_sym(top + 1) * gamma_sym(bottom + 1).invert() *
           gamma_sym(top - bottom + 1).invert();
}

}  // namespace binomid
