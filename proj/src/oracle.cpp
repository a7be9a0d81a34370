#include "binomid/oracle.hpp"

#include <map>

#include "binomid/errors.hpp"

// Deliberately self-contained: this translation unit reimplements the
// evaluation semantics from first principles (naive loops, no caches, no
// shared Gamma/binomial kernels) so it can serve as an independent
// cross-check of eval_exact.

namespace binomid {

namespace {

// value = sum of coeff * pi^(pihalf/2)
using Val = std::map<long, Rational>;

Val val_rat(const Rational& q) {
    Val v;
    if (q != 0) v[0] = q;
    return v;
}

Val val_add(const Val& a, const Val& b) {
    Val r = a;
    for (const auto& [h, c] : b) {
        Rational s = c;
        if (r.count(h)) s += r[h];
        if (s == 0)
            r.erase(h);
        else
            r[h] = s;
    }
    return r;
}

Val val_neg(const Val& a) {
    Val r;
    for (const auto& [h, c] : a) r[h] = -c;
    return r;
}

Val val_mul(const Val& a, const Val& b) {
    Val r;
    for (const auto& [ha, ca] : a)
        for (const auto& [hb, cb] : b) {
            Rational s = ca * cb;
            if (r.count(ha + hb)) s += r[ha + hb];
            if (s == 0)
                r.erase(ha + hb);
            else
                r[ha + hb] = s;
        }
    return r;
}

Val val_inv(const Val& a) {
    if (a.empty()) throw ZeroValue();
    if (a.size() > 1) throw NotMonomial();
    Val r;
    r[-a.begin()->first] = Rational(1) / a.begin()->second;
    return r;
}

Rational val_scalar(const Val& a) {
    if (a.empty()) return Rational(0);
    if (a.size() > 1 || a.begin()->first != 0) throw NotMonomial();
    return a.begin()->second;
}

// Gamma on the half-integer grid, walked naively from Gamma(1) = 1 or
// Gamma(1/2) = pi^(1/2).
Val gam(const Rational& x) {
    Val v;
    if (is_integer(x)) {
        if (x <= 0) throw GammaPole(rational_str(x));
        Rational c(1);
        for (Rational z(1); z < x; z += 1) c *= z;
        v[0] = c;
        return v;
    }
    if (x.get_den() != 2) throw OffGrid(rational_str(x));
    Rational c(1);
    Rational z = x;
    while (z > Rational(1, 2)) {
        z -= 1;
        c *= z;
    }
    while (z < Rational(1, 2)) {
        c /= z;
        z += 1;
    }
    v[1] = c;
    return v;
}

bool pole(const Rational& q) { return is_integer(q) && q <= 0; }

Val binom(const Rational& top, const Rational& bottom) {
    if (is_integer(top) && is_integer(bottom)) {
        if (top < 0) throw Undefined("negative integer top");
        if (bottom < 0 || bottom > top) return Val{};
        Rational c(1);
        for (Rational j(1); j <= bottom; j += 1)
            c *= (top - bottom + j) / j;
        return val_rat(c);
    }
    if (pole(top + 1)) throw Undefined("numerator Gamma pole");
    if (pole(bottom + 1) || pole(top - bottom + 1)) return Val{};
    return val_mul(gam(top + 1),
                   val_inv(val_mul(gam(bottom + 1), gam(top - bottom + 1))));
}

using Env = std::map<std::string, Rational>;

Val ev(const SumExpr& e, Env& env);

Rational ev_rat(const SumExpr& e, Env& env) { return val_scalar(ev(e, env)); }

long ev_int(const SumExpr& e, Env& env) {
    Rational q = ev_rat(e, env);
    if (!is_integer(q)) throw Undefined("expected integer");
    return to_long(q);
}

Val ev(const SumExpr& e, Env& env) {
    switch (e.kind) {
        case NodeKind::IntLit:
        case NodeKind::RatLit:
            return val_rat(e.value);
        case NodeKind::ParamRef:
        case NodeKind::Var: {
            auto it = env.find(e.name);
            if (it == env.end()) throw UnboundParam(e.name);
            return val_rat(it->second);
        }
        case NodeKind::Neg:
            return val_neg(ev(*e.kids[0], env));
        case NodeKind::Add: {
            Val acc;
            for (const auto& k : e.kids) acc = val_add(acc, ev(*k, env));
            return acc;
        }
        case NodeKind::Mul: {
            Val acc = val_rat(Rational(1));
            for (const auto& k : e.kids) acc = val_mul(acc, ev(*k, env));
            return acc;
        }
        case NodeKind::Pow: {
            long exp = ev_int(*e.kids[1], env);
            Val base = ev(*e.kids[0], env);
            if (exp == 0) return val_rat(Rational(1));
            if (base.empty()) {
                if (exp > 0) return Val{};
                throw ZeroValue("negative power of zero");
            }
            if (exp < 0) {
                base = val_inv(base);
                exp = -exp;
            }
            Val acc = base;
            for (long i = 1; i < exp; ++i) acc = val_mul(acc, base);
            return acc;
        }
        case NodeKind::AltSign: {
            long exp = ev_int(*e.kids[0], env);
            return val_rat(Rational(((exp % 2) + 2) % 2 == 0 ? 1 : -1));
        }
        case NodeKind::BinomI: {
            Rational t = ev_rat(*e.kids[0], env);
            Rational b = ev_rat(*e.kids[1], env);
            if (!is_integer(t) || !is_integer(b))
                throw Undefined("non-integer argument");
            return binom(t, b);
        }
        case NodeKind::BinomG:
            return binom(ev_rat(*e.kids[0], env), ev_rat(*e.kids[1], env));
        case NodeKind::BinomInv:
            return val_inv(
                binom(ev_rat(*e.kids[0], env), ev_rat(*e.kids[1], env)));
        case NodeKind::Catalan: {
            long j = ev_int(*e.kids[0], env);
            if (j < 0) throw Undefined("negative Catalan index");
            return val_rat(val_scalar(binom(Rational(2 * j), Rational(j))) /
                           (j + 1));
        }
        case NodeKind::Floor:
            return val_rat(Rational(rational_floor(ev_rat(*e.kids[0], env) / 2)));
        case NodeKind::Ceil:
            return val_rat(Rational(rational_ceil(ev_rat(*e.kids[0], env) / 2)));
        case NodeKind::Sum: {
            long lo = ev_int(*e.kids[0], env);
            long hi = ev_int(*e.kids[1], env);
            Val acc;
            for (long k = lo; k <= hi; ++k) {
                env[e.name] = Rational(k);
                acc = val_add(acc, ev(*e.kids[2], env));
            }
            env.erase(e.name);
            return acc;
        }
    }
    throw Undefined("unknown node kind");
}

}  // namespace

PiValue eval_oracle(const ExprPtr& expr, const ParamBinding& binding) {
    Env env = binding;
    Val v = ev(*expr, env);
    PiValue out;
    for (const auto& [h, c] : v) out.add_term(h, c);
    return out;
}

}  // namespace binomid
