#ifndef BINOMID_RATIONAL_HPP
#define BINOMID_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace binomid {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline long to_long(const Rational& q) {
    return static_cast<long>(q.get_num().get_si());
}

// floor(q) as an integer
inline Integer rational_floor(const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return f;
}

inline Integer rational_ceil(const Rational& q) {
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return c;
}

// q * 2 is an integer, i.e. q lies on the half-integer grid
inline bool on_half_grid(const Rational& q) {
    return q.get_den() == 1 || q.get_den() == 2;
}

inline std::string rational_str(const Rational& q) { return q.get_str(); }

inline Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational b = base;
    bool inv = e < 0;
    unsigned long n = inv ? static_cast<unsigned long>(-e)
                          : static_cast<unsigned long>(e);
    Rational acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    if (inv) acc = Rational(1) / acc;
    return acc;
}

}  // namespace binomid

#endif
