#include "binomid/special.hpp"

#include <mutex>
#include <sstream>
#include <vector>

namespace binomid {

namespace {

std::mutex fact_mutex;
std::vector<Integer> fact_cache = {Integer(1)};  // fact_cache[n] = n!

bool gamma_pole(HalfInt a) { return a.is_integer() && a.as_int() <= 0; }

}  // namespace

Integer factorial(long n) {
    std::lock_guard<std::mutex> lock(fact_mutex);
    while (static_cast<long>(fact_cache.size()) <= n)
        fact_cache.push_back(fact_cache.back() *
                             Integer(static_cast<long>(fact_cache.size())));
    return fact_cache[n];
}

PiScalar gamma_exact(HalfInt a) {
    if (gamma_pole(a)) throw GammaPole(a.str());
    if (a.is_integer()) return PiScalar(Rational(factorial(a.as_int() - 1)), 0);
    // a = n + 1/2 with twice = 2n+1 odd
    long n = (a.twice - 1) / 2;
    if (n >= 0) {
        // Gamma(n + 1/2) = sqrt(pi) (2n)! / (4^n n!)
        Rational c(factorial(2 * n), factorial(n));
        c.canonicalize();  // the two-argument constructor does not reduce
        c /= pow_rational(Rational(4), n);
        return PiScalar(c, 1);
    }
    // downward recurrence Gamma(z) = Gamma(z+1)/z
    Rational c(1);
    Rational z = a.value();
    while (z < Rational(1, 2)) {
        c /= z;
        z += 1;
    }
    return PiScalar(c, 1);
}

Integer binom_int(long m, long n) {
    if (m < 0) throw Undefined("binom_int requires m >= 0");
    if (n < 0 || n > m) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m),
                 static_cast<unsigned long>(n));
    return r;
}

PiScalar binom_general(HalfInt u, HalfInt v) {
    if (gamma_pole(u + HalfInt::from_int(1)))
        throw Undefined("binom(" + u.str() + "," + v.str() +
                        "): numerator Gamma pole");
    HalfInt w = u - v;
    bool pole_v = gamma_pole(v + HalfInt::from_int(1));
    bool pole_w = gamma_pole(w + HalfInt::from_int(1));
    if (pole_v || pole_w) return PiScalar();  // limit convention
    if (u.is_integer() && v.is_integer())
        return PiScalar(Rational(binom_int(u.as_int(), v.as_int())), 0);
    PiScalar num = gamma_exact(u + HalfInt::from_int(1));
    PiScalar d1 = gamma_exact(v + HalfInt::from_int(1));
    PiScalar d2 = gamma_exact(w + HalfInt::from_int(1));
    return num / (d1 * d2);
}

Integer catalan(long j) {
    if (j < 0) throw Undefined("catalan requires j >= 0");
    Integer b = binom_int(2 * j, j);
    return b / (j + 1);
}

namespace {

void record(GammaIdentityReport& rep, const std::string& name, bool pass,
            const std::string& detail) {
    rep.entries.push_back({name, pass, detail});
}

}  // namespace

GammaIdentityReport check_gamma_identities(long lo, long hi) {
    GammaIdentityReport rep;
    const PiScalar inv_pi(Rational(1), -2);
    const PiScalar sqrt_pi(Rational(1), 1);

    auto run = [&](const std::string& name, auto&& body) {
        for (long r = lo; r <= hi; ++r) {
            std::string fail = body(r);
            if (!fail.empty()) {
                record(rep, name, false, fail);
                return;
            }
        }
        record(rep, name, true, "");
    };

    // binom(r, 1/2) = 2^(2r+1)/pi * binom(2r, r)^(-1)
    run("binom(r,1/2)", [&](long r) -> std::string {
        PiScalar lhs = binom_general(HalfInt::from_int(r), HalfInt(1));
        PiScalar rhs = PiScalar(pow_rational(Rational(2), 2 * r + 1), 0) *
                       inv_pi *
                       binom_general(HalfInt::from_int(2 * r), HalfInt::from_int(r))
                           .inverse();
        return lhs == rhs ? "" : "r=" + std::to_string(r);
    });

    // binom(r, r/2) = 2^(2r+1)/((r+1) pi) * binom(r, (r-1)/2)^(-1)
    // (constant corrected; follows from the Legendre duplication formula)
    run("binom(r,r/2)", [&](long r) -> std::string {
        PiScalar lhs = binom_general(HalfInt::from_int(r), HalfInt(r));
        PiScalar rhs = PiScalar(pow_rational(Rational(2), 2 * r + 1) /
                                    Rational(r + 1),
                                0) *
                       inv_pi *
                       binom_general(HalfInt::from_int(r), HalfInt(r - 1)).inverse();
        return lhs == rhs ? "" : "r=" + std::to_string(r);
    });

    // binom(r+1/2, r) = (2r+1) 2^(-2r) binom(2r, r)
    run("binom(r+1/2,r)", [&](long r) -> std::string {
        PiScalar lhs = binom_general(HalfInt(2 * r + 1), HalfInt::from_int(r));
        PiScalar rhs(Rational(2 * r + 1) * Rational(binom_int(2 * r, r)) /
                         pow_rational(Rational(2), 2 * r),
                     0);
        return lhs == rhs ? "" : "r=" + std::to_string(r);
    });

    // r binom(s, r) = s binom(s-1, r-1) over 0 <= r <= s
    run("r*binom(s,r)", [&](long s) -> std::string {
        if (s < 1) return "";  // both sides are zero throughout row 0
        for (long r = 1; r <= s; ++r) {
            Integer lhs = Integer(r) * binom_int(s, r);
            Integer rhs = Integer(s) * binom_int(s - 1, r - 1);
            if (lhs != rhs)
                return "s=" + std::to_string(s) + ",r=" + std::to_string(r);
        }
        return "";
    });

    // Gamma(u + 1/2) = sqrt(pi) 2^(-2u) binom(2u, u) Gamma(u + 1), u >= 0
    run("gamma(u+1/2)", [&](long u) -> std::string {
        if (u < 0) return "";
        PiScalar lhs = gamma_exact(HalfInt(2 * u + 1));
        PiScalar rhs = sqrt_pi *
                       PiScalar(Rational(binom_int(2 * u, u)) /
                                    pow_rational(Rational(2), 2 * u),
                                0) *
                       gamma_exact(HalfInt::from_int(u + 1));
        return lhs == rhs ? "" : "u=" + std::to_string(u);
    });

    // Gamma(-u + 1/2) = (-1)^u 2^(2u) binom(2u,u)^(-1) sqrt(pi)/Gamma(u+1),
    // applied at integer u >= 0 only
    run("gamma(-u+1/2)", [&](long u) -> std::string {
        if (u < 0) return "";
        PiScalar lhs = gamma_exact(HalfInt(-2 * u + 1));
        Rational sign = (u % 2 == 0) ? Rational(1) : Rational(-1);
        PiScalar rhs = PiScalar(sign * pow_rational(Rational(2), 2 * u) /
                                    Rational(binom_int(2 * u, u)),
                                0) *
                       sqrt_pi * gamma_exact(HalfInt::from_int(u + 1)).inverse();
        return lhs == rhs ? "" : "u=" + std::to_string(u);
    });

    return rep;
}

}  // namespace binomid
