#include "binomid/pivalue.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace binomid {

using nlohmann::json;

std::string PiScalar::str() const {
    PiValue v(*this);
    return v.str();
}

PiValue operator+(const PiValue& a, const PiValue& b) {
    PiValue r = a;
    for (const auto& [h, c] : b.terms_) r.add_term(h, c);
    return r;
}

PiValue operator-(const PiValue& a) {
    PiValue r;
    for (const auto& [h, c] : a.terms_) r.terms_[h] = -c;
    return r;
}

PiValue operator-(const PiValue& a, const PiValue& b) { return a + (-b); }

PiValue operator*(const PiValue& a, const PiValue& b) {
    PiValue r;
    for (const auto& [ha, ca] : a.terms_)
        for (const auto& [hb, cb] : b.terms_) r.add_term(ha + hb, ca * cb);
    return r;
}

PiScalar PiValue::invert() const {
    if (terms_.empty()) throw ZeroValue();
    if (terms_.size() > 1) throw NotMonomial();
    const auto& [h, c] = *terms_.begin();
    return PiScalar(Rational(1) / c, -h);
}

BigFloat PiValue::to_float(int digits) const {
    // pi carried at digits+5 places per the precision contract
    mpfr_prec_t prec = BigFloat::bits_for_digits(digits + 5);
    BigFloat pi = BigFloat::pi(prec);
    BigFloat sqrt_pi = pi.sqrt();
    BigFloat acc(prec);
    for (const auto& [h, c] : terms_) {
        BigFloat t = BigFloat::from_rational(c, prec);
        if (h != 0) t *= sqrt_pi.pow_si(h);
        acc += t;
    }
    return acc;
}

std::string PiValue::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [h, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rational_str(c);
        if (h == 2) {
            os << "*pi";
        } else if (h == -2) {
            os << "/pi";
        } else if (h != 0) {
            os << "*pi^(" << h << "/2)";
        }
    }
    return os.str();
}

std::string PiValue::to_json() const {
    json arr = json::array();
    for (const auto& [h, c] : terms_) {
        arr.push_back({{"pihalf", h},
                       {"num", c.get_num().get_str()},
                       {"den", c.get_den().get_str()}});
    }
    return arr.dump();
}

PiValue PiValue::from_json(const std::string& text) {
    json arr = json::parse(text);
    PiValue v;
    for (const auto& item : arr) {
        Rational c(Integer(item.at("num").get<std::string>()),
                   Integer(item.at("den").get<std::string>()));
        c.canonicalize();
        v.add_term(item.at("pihalf").get<long>(), c);
    }
    return v;
}

}  // namespace binomid
