#include "binomid/quadrature.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "binomid/errors.hpp"

namespace binomid {

namespace {

// ---------------------------------------------------------------- Spouge

struct SpougeTable {
    long a = 0;
    std::vector<BigFloat> c;  // c[0] = sqrt(2 pi), c[k] for k = 1..a-1
};

std::shared_mutex spouge_mutex;
std::map<std::pair<long, mpfr_prec_t>, SpougeTable> spouge_cache;

const SpougeTable& spouge_table(int digits) {
    long a = static_cast<long>(digits * 1.2655) + 3;  // digits * ln10/ln(2pi)
    mpfr_prec_t prec = BigFloat::bits_for_digits(digits + 15);
    auto key = std::make_pair(a, prec);
    {
        std::shared_lock lock(spouge_mutex);
        auto it = spouge_cache.find(key);
        if (it != spouge_cache.end()) return it->second;
    }
    SpougeTable t;
    t.a = a;
    BigFloat two_pi = BigFloat::pi(prec) * BigFloat::from_long(2, prec);
    t.c.push_back(two_pi.sqrt());
    BigFloat fact = BigFloat::from_long(1, prec);
    for (long k = 1; k < a; ++k) {
        if (k > 1) fact *= BigFloat::from_long(k - 1, prec);
        BigFloat ak = BigFloat::from_long(a - k, prec);
        BigFloat ck = ak.pow(BigFloat::from_rational(
                          Rational(2 * k - 1, 2), prec)) *
                      ak.exp() / fact;
        if (k % 2 == 0) ck = -ck;
        t.c.push_back(ck);
    }
    std::unique_lock lock(spouge_mutex);
    return spouge_cache.emplace(key, std::move(t)).first->second;
}

BigFloat gamma_positive(const BigFloat& x, int digits) {
    const SpougeTable& t = spouge_table(digits);
    mpfr_prec_t prec = BigFloat::bits_for_digits(digits + 15);
    BigFloat z = BigFloat::from_rational(Rational(0), prec);
    mpfr_set(z.raw(), x.raw(), MPFR_RNDN);
    z -= BigFloat::from_long(1, prec);  // Gamma(x) = Gamma(z+1)
    BigFloat za = z + BigFloat::from_long(t.a, prec);
    BigFloat sum = t.c[0];
    for (long k = 1; k < t.a; ++k)
        sum += t.c[k] / (z + BigFloat::from_long(k, prec));
    BigFloat half = BigFloat::from_rational(Rational(1, 2), prec);
    return za.pow(z + half) * (-za).exp() * sum;
}

// ------------------------------------------------------------- tanh-sinh

struct Node {
    BigFloat d;  // distance of abscissa from the nearer endpoint of [-1,1]
    BigFloat w;  // weight
};

struct LevelNodes {
    std::vector<Node> nodes;  // t = j*h for odd j (level>0) or all j>=1
    Node center;              // only for level 0 (t = 0)
};

std::shared_mutex node_mutex;
std::map<std::pair<mpfr_prec_t, int>, LevelNodes> node_cache;

// Nodes at step h = 2^-level; for level > 0 only the odd multiples that
// are new relative to the coarser level.
const LevelNodes& level_nodes(mpfr_prec_t prec, int level, long max_exp10) {
    auto key = std::make_pair(prec, level);
    {
        std::shared_lock lock(node_mutex);
        auto it = node_cache.find(key);
        if (it != node_cache.end()) return it->second;
    }
    LevelNodes ln;
    BigFloat pi_half = BigFloat::pi(prec) * BigFloat::from_rational(Rational(1, 2), prec);
    BigFloat one = BigFloat::from_long(1, prec);
    BigFloat two = BigFloat::from_long(2, prec);
    auto make = [&](const BigFloat& t) {
        BigFloat s = pi_half * t.sinh();
        BigFloat ch = s.cosh();
        Node n{two / ((s * two).exp() + one),  // 1 - tanh(s)
               pi_half * t.cosh() / (ch * ch)};
        return n;
    };
    ln.center = make(BigFloat::from_long(0, prec));
    Rational h = pow_rational(Rational(1, 2), level);
    long step = level == 0 ? 1 : 2;
    long start = level == 0 ? 1 : 1;
    // stop once the distance to the endpoint is negligible at any
    // admissible singularity strength (exponents > -1, so order 1/2 is
    // the worst case we budget for, doubled for margin)
    for (long j = start;; j += step) {
        BigFloat t = BigFloat::from_rational(h * j, prec);
        Node n = make(t);
        if (!n.d.is_zero() && n.d.exponent() < -(max_exp10 * 7)) break;
        if (n.d.is_zero()) break;
        ln.nodes.push_back(std::move(n));
    }
    std::unique_lock lock(node_mutex);
    return node_cache.emplace(key, std::move(ln)).first->second;
}

}  // namespace

BigFloat gamma_numeric(const BigFloat& x, int digits) {
    mpfr_prec_t prec = BigFloat::bits_for_digits(digits + 15);
    if (x.sign() > 0) return gamma_positive(x, digits);
    // reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x))
    BigFloat pi = BigFloat::pi(prec);
    BigFloat s = (pi * x).sin();
    if (s.is_zero()) throw NumericPole("gamma at non-positive integer");
    return pi / (s * gamma_positive(BigFloat::from_long(1, prec) - x, digits));
}

BigFloat gamma_numeric(const Rational& x, int digits) {
    if (is_integer(x) && x <= 0)
        throw NumericPole("gamma at non-positive integer " + rational_str(x));
    mpfr_prec_t prec = BigFloat::bits_for_digits(digits + 15);
    return gamma_numeric(BigFloat::from_rational(x, prec), digits);
}

BigFloat tanh_sinh(const Integrand& f, const BigFloat& a, const BigFloat& b,
                   int digits) {
    const int level_cap = 12;
    mpfr_prec_t prec = BigFloat::bits_for_digits(digits + 10);
    BigFloat half_len = (b - a) * BigFloat::from_rational(Rational(1, 2), prec);
    BigFloat len = b - a;
    BigFloat eps = BigFloat::pow10(-(digits + 2), prec);

    auto eval_pair = [&](const Node& n) {
        // node +x: distance d from the right endpoint; node -x mirrors
        BigFloat dr = half_len * n.d;
        BigFloat dl = len - dr;
        BigFloat xr = b - dr;
        BigFloat xl = a + dr;
        BigFloat val = f(xr, dl, dr) + f(xl, dr, dl);
        return val * n.w;
    };

    BigFloat sum(prec);
    {
        const LevelNodes& ln = level_nodes(prec, 0, digits + 10);
        BigFloat dc = half_len * ln.center.d;
        sum = f(a + dc, dc, len - dc) * ln.center.w;
        for (const Node& n : ln.nodes) sum += eval_pair(n);
    }
    BigFloat prev = sum;  // running sums exclude h and half_len factors
    Rational h(1);
    for (int level = 1; level <= level_cap; ++level) {
        const LevelNodes& ln = level_nodes(prec, level, digits + 10);
        BigFloat add(prec);
        for (const Node& n : ln.nodes) add += eval_pair(n);
        BigFloat cur = sum + add;
        h /= 2;
        // integral estimate at this level
        BigFloat est = cur * half_len * BigFloat::from_rational(h, prec);
        BigFloat prev_est =
            prev * half_len * BigFloat::from_rational(h * 2, prec);
        BigFloat diff = (est - prev_est).abs();
        BigFloat scale = est.abs();
        if (scale < BigFloat::from_long(1, prec)) scale = BigFloat::from_long(1, prec);
        if (level >= 3 && diff <= eps * scale) return est;
        sum = cur;
        prev = cur;
    }
    throw NoConvergence("tanh-sinh refinement stalled above target at level cap");
}

namespace {

BigFloat rpow(const BigFloat& base, const Rational& e, mpfr_prec_t prec) {
    if (is_integer(e)) return base.pow_si(to_long(e));
    return base.pow(BigFloat::from_rational(e, prec));
}

}  // namespace

QuadResult integrate(const QuadratureSpec& spec) {
    int digits = spec.digits;
    mpfr_prec_t prec = BigFloat::bits_for_digits(digits + 10);
    BigFloat pi = BigFloat::pi(prec);
    BigFloat zero = BigFloat::from_long(0, prec);
    BigFloat half_pi = pi * BigFloat::from_rational(Rational(1, 2), prec);
    Rational u = spec.u, v = spec.v;

    // cos^u x sin^v x over [0, pi/2]: cos x = sin(dr), sin x = sin(dl)
    auto quarter = [&](const Rational& uu, const Rational& vv) {
        return tanh_sinh(
            [&, uu, vv](const BigFloat&, const BigFloat& dl, const BigFloat& dr) {
                return rpow(dr.sin(), uu, prec) * rpow(dl.sin(), vv, prec);
            },
            zero, half_pi, digits);
    };

    switch (spec.kind) {
        case IntegralKind::K_quarter:
            return {quarter(u, v), zero, false};
        case IntegralKind::I_half_angle: {
            BigFloat val = tanh_sinh(
                [&](const BigFloat&, const BigFloat& dl, const BigFloat& dr) {
                    BigFloat h = BigFloat::from_rational(Rational(1, 2), prec);
                    return rpow((dr * h).sin(), u, prec) *
                           rpow((dl * h).sin(), v, prec);
                },
                zero, pi, digits);
            return {val, zero, false};
        }
        case IntegralKind::CosPower:
        case IntegralKind::J_full: {
            Rational m = u;
            Rational vv = spec.kind == IntegralKind::CosPower ? Rational(0) : v;
            // split at pi/2; on [pi/2, pi] write cos x = -sin(x - pi/2)
            BigFloat left = tanh_sinh(
                [&](const BigFloat&, const BigFloat& dl, const BigFloat& dr) {
                    return rpow(dr.sin(), m, prec) * rpow(dl.sin(), vv, prec);
                },
                zero, half_pi, digits);
            BigFloat right_mag = tanh_sinh(
                [&](const BigFloat&, const BigFloat& dl, const BigFloat& dr) {
                    return rpow(dl.sin(), m, prec) * rpow(dr.sin(), vv, prec);
                },
                half_pi, pi, digits);
            if (is_integer(m)) {
                bool odd = to_long(m) % 2 != 0;
                return {odd ? left - right_mag : left + right_mag, zero, false};
            }
            // principal power: (cos x)^u = |cos x|^u (cos(pi u) + i sin(pi u))
            BigFloat pu = pi * BigFloat::from_rational(m, prec);
            return {left + pu.cos() * right_mag, pu.sin() * right_mag, true};
        }
        case IntegralKind::Beta01: {
            BigFloat one = BigFloat::from_long(1, prec);
            BigFloat val = tanh_sinh(
                [&](const BigFloat&, const BigFloat& dl, const BigFloat& dr) {
                    return rpow(dr, u, prec) * rpow(dl, v, prec);
                },
                zero, one, digits);
            return {val, zero, false};
        }
    }
    throw ConfigError("unknown integral kind");
}

QuadResult closed_form_numeric(const QuadratureSpec& spec) {
    int digits = spec.digits;
    mpfr_prec_t prec = BigFloat::bits_for_digits(digits + 10);
    BigFloat pi = BigFloat::pi(prec);
    BigFloat zero = BigFloat::from_long(0, prec);
    Rational u = spec.u, v = spec.v;

    auto binom_num = [&](const Rational& top, const Rational& bottom) {
        return gamma_numeric(top + 1, digits) /
               (gamma_numeric(bottom + 1, digits) *
                gamma_numeric(top - bottom + 1, digits));
    };
    auto k_num = [&](const Rational& uu, const Rational& vv) {
        BigFloat p2 = rpow(BigFloat::from_long(2, prec), -uu - vv - 1, prec);
        return p2 * pi * binom_num(uu, uu / 2) * binom_num(vv, vv / 2) /
               binom_num((uu + vv) / 2, uu / 2);
    };

    switch (spec.kind) {
        case IntegralKind::K_quarter:
            return {k_num(u, v), zero, false};
        case IntegralKind::I_half_angle:
            return {k_num(u, v) * BigFloat::from_long(2, prec), zero, false};
        case IntegralKind::CosPower:
        case IntegralKind::J_full: {
            Rational vv = spec.kind == IntegralKind::CosPower ? Rational(0) : v;
            if (is_integer(u)) {
                if (to_long(u) % 2 != 0) return {zero, zero, false};
                return {k_num(u, vv) * BigFloat::from_long(2, prec), zero, false};
            }
            BigFloat pu = pi * BigFloat::from_rational(u, prec);
            BigFloat k = k_num(u, vv);
            // 2 cos^2(pi u / 2) = 1 + cos(pi u)
            return {k * (BigFloat::from_long(1, prec) + pu.cos()),
                    k * pu.sin(), true};
        }
        case IntegralKind::Beta01:
            return {BigFloat::from_long(1, prec) /
                        (BigFloat::from_rational(u + 1, prec) *
                         binom_num(u + v + 1, u + 1)),
                    zero, false};
    }
    throw ConfigError("unknown integral kind");
}

}  // namespace binomid
