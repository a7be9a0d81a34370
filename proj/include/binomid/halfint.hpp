#ifndef BINOMID_HALFINT_HPP
#define BINOMID_HALFINT_HPP

#include <compare>
#include <string>

#include "binomid/errors.hpp"
#include "binomid/rational.hpp"

namespace binomid {

// A point on the half-integer grid, stored as twice its value.
struct HalfInt {
    long twice = 0;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(long t) : twice(t) {}

    static constexpr HalfInt from_int(long n) { return HalfInt(2 * n); }
    static HalfInt from_rational(const Rational& q) {
        Rational t = q * 2;
        if (!binomid::is_integer(t)) throw OffGrid(rational_str(q));
        return HalfInt(to_long(t));
    }

    bool is_integer() const { return twice % 2 == 0; }
    long as_int() const { return twice / 2; }
    Rational value() const { return make_rational(twice, 2); }

    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) {
        return HalfInt(a.twice + b.twice);
    }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) {
        return HalfInt(a.twice - b.twice);
    }
    friend constexpr HalfInt operator-(HalfInt a) { return HalfInt(-a.twice); }

    std::string str() const {
        if (is_integer()) return std::to_string(as_int());
        return std::to_string(twice) + "/2";
    }
};

}  // namespace binomid

#endif
