#include "binomid/eval.hpp"

#include <atomic>
#include <thread>

#include "binomid/errors.hpp"
#include "binomid/quadrature.hpp"
#include "binomid/special.hpp"

namespace binomid {

namespace {

using Env = std::map<std::string, Rational>;

const Rational& lookup(const Env& env, const std::string& name) {
    auto it = env.find(name);
    if (it == env.end()) throw UnboundParam(name);
    return it->second;
}

// ------------------------------------------------------------ exact path

ExactValue eval_ev(const SumExpr& e, Env& env);

Rational eval_rat(const SumExpr& e, Env& env) {
    ExactValue v = eval_ev(e, env);
    if (!v.is_rational())
        throw Undefined("expected a rational subexpression, got " + v.str());
    return v.as_rational();
}

long eval_int(const SumExpr& e, Env& env, const char* what) {
    Rational q = eval_rat(e, env);
    if (!is_integer(q))
        throw Undefined(std::string(what) + " must be an integer, got " +
                        rational_str(q));
    return to_long(q);
}

ExactValue eval_ev(const SumExpr& e, Env& env) {
    switch (e.kind) {
        case NodeKind::IntLit:
        case NodeKind::RatLit:
            return ExactValue(e.value);
        case NodeKind::ParamRef:
        case NodeKind::Var:
            return ExactValue(lookup(env, e.name));
        case NodeKind::Neg:
            return -eval_ev(*e.kids[0], env);
        case NodeKind::Add: {
            ExactValue acc;
            for (const auto& k : e.kids) acc = acc + eval_ev(*k, env);
            return acc;
        }
        case NodeKind::Mul: {
            ExactValue acc(Rational(1));
            for (const auto& k : e.kids) acc = acc * eval_ev(*k, env);
            return acc;
        }
        case NodeKind::Pow: {
            long exp = eval_int(*e.kids[1], env, "exponent");
            return eval_ev(*e.kids[0], env).pow_int(exp);
        }
        case NodeKind::AltSign: {
            long exp = eval_int(*e.kids[0], env, "sign exponent");
            return ExactValue(Rational(((exp % 2) + 2) % 2 == 0 ? 1 : -1));
        }
        case NodeKind::BinomI: {
            Rational top = eval_rat(*e.kids[0], env);
            Rational bottom = eval_rat(*e.kids[1], env);
            if (!is_integer(top) || !is_integer(bottom))
                throw Undefined("integer binomial with non-integer argument (" +
                                rational_str(top) + "," + rational_str(bottom) +
                                ")");
            return binom_sym(top, bottom);
        }
        case NodeKind::BinomG: {
            Rational top = eval_rat(*e.kids[0], env);
            Rational bottom = eval_rat(*e.kids[1], env);
            return binom_sym(top, bottom);
        }
        case NodeKind::BinomInv: {
            Rational top = eval_rat(*e.kids[0], env);
            Rational bottom = eval_rat(*e.kids[1], env);
            return binom_sym(top, bottom).invert();
        }
        case NodeKind::Catalan: {
            long j = eval_int(*e.kids[0], env, "Catalan index");
            if (j < 0) throw Undefined("negative Catalan index");
            return ExactValue(Rational(catalan(j)));
        }
        case NodeKind::Floor:
            return ExactValue(
                Rational(rational_floor(eval_rat(*e.kids[0], env) / 2)));
        case NodeKind::Ceil:
            return ExactValue(
                Rational(rational_ceil(eval_rat(*e.kids[0], env) / 2)));
        case NodeKind::Sum: {
            long lo = eval_int(*e.kids[0], env, "sum lower bound");
            long hi = eval_int(*e.kids[1], env, "sum upper bound");
            ExactValue acc;
            for (long k = lo; k <= hi; ++k) {
                env[e.name] = Rational(k);
                acc = acc + eval_ev(*e.kids[2], env);
            }
            env.erase(e.name);
            return acc;
        }
    }
    throw Undefined("unknown node kind");
}

// ----------------------------------------------------------- numeric path

struct NumCtx {
    int digits;
    mpfr_prec_t prec;
};

BigFloat eval_num(const SumExpr& e, Env& env, const NumCtx& cx);

BigFloat binom_numeric(const Rational& top, const Rational& bottom,
                       const NumCtx& cx) {
    auto pole = [](const Rational& q) { return is_integer(q) && q <= -1; };
    if (is_integer(top) && is_integer(bottom)) {
        long t = to_long(top);
        if (t >= 0)
            return BigFloat::from_rational(
                Rational(binom_int(t, to_long(bottom))), cx.prec);
        throw NumericPole("binomial with negative integer top " +
                          rational_str(top));
    }
    if (pole(top))
        throw NumericPole("numerator Gamma pole at " + rational_str(top + 1));
    if (pole(bottom) || pole(top - bottom))
        return BigFloat::from_long(0, cx.prec);  // limit convention
    return gamma_numeric(top + 1, cx.digits) /
           (gamma_numeric(bottom + 1, cx.digits) *
            gamma_numeric(top - bottom + 1, cx.digits));
}

BigFloat eval_num(const SumExpr& e, Env& env, const NumCtx& cx) {
    switch (e.kind) {
        case NodeKind::IntLit:
        case NodeKind::RatLit:
            return BigFloat::from_rational(e.value, cx.prec);
        case NodeKind::ParamRef:
        case NodeKind::Var:
            return BigFloat::from_rational(lookup(env, e.name), cx.prec);
        case NodeKind::Neg:
            return -eval_num(*e.kids[0], env, cx);
        case NodeKind::Add: {
            BigFloat acc(cx.prec);
            for (const auto& k : e.kids) acc += eval_num(*k, env, cx);
            return acc;
        }
        case NodeKind::Mul: {
            BigFloat acc = BigFloat::from_long(1, cx.prec);
            for (const auto& k : e.kids) acc *= eval_num(*k, env, cx);
            return acc;
        }
        case NodeKind::Pow: {
            long exp = eval_int(*e.kids[1], env, "exponent");
            return eval_num(*e.kids[0], env, cx).pow_si(exp);
        }
        case NodeKind::AltSign: {
            long exp = eval_int(*e.kids[0], env, "sign exponent");
            return BigFloat::from_long(((exp % 2) + 2) % 2 == 0 ? 1 : -1,
                                       cx.prec);
        }
        case NodeKind::BinomI:
        case NodeKind::BinomG:
            return binom_numeric(eval_rat(*e.kids[0], env),
                                 eval_rat(*e.kids[1], env), cx);
        case NodeKind::BinomInv: {
            BigFloat b = binom_numeric(eval_rat(*e.kids[0], env),
                                       eval_rat(*e.kids[1], env), cx);
            if (b.is_zero())
                throw NumericPole("inverse of vanishing binomial");
            return BigFloat::from_long(1, cx.prec) / b;
        }
        case NodeKind::Catalan: {
            long j = eval_int(*e.kids[0], env, "Catalan index");
            if (j < 0) throw Undefined("negative Catalan index");
            return BigFloat::from_rational(Rational(catalan(j)), cx.prec);
        }
        case NodeKind::Floor:
            return BigFloat::from_rational(
                Rational(rational_floor(eval_rat(*e.kids[0], env) / 2)),
                cx.prec);
        case NodeKind::Ceil:
            return BigFloat::from_rational(
                Rational(rational_ceil(eval_rat(*e.kids[0], env) / 2)),
                cx.prec);
        case NodeKind::Sum: {
            long lo = eval_int(*e.kids[0], env, "sum lower bound");
            long hi = eval_int(*e.kids[1], env, "sum upper bound");
            BigFloat acc(cx.prec);
            for (long k = lo; k <= hi; ++k) {
                env[e.name] = Rational(k);
                acc += eval_num(*e.kids[2], env, cx);
            }
            env.erase(e.name);
            return acc;
        }
    }
    throw Undefined("unknown node kind");
}

bool compare(CmpOp op, const Rational& a, const Rational& b) {
    switch (op) {
        case CmpOp::Lt: return a < b;
        case CmpOp::Le: return a <= b;
        case CmpOp::Gt: return a > b;
        case CmpOp::Ge: return a >= b;
        case CmpOp::Eq: return a == b;
        case CmpOp::Ne: return a != b;
    }
    return false;
}

std::string canonical_str(const ExactValue& v) {
    if (v.pivalue_representable()) return v.to_pivalue().str();
    return v.str();
}

}  // namespace

PiValue eval_exact(const ExprPtr& expr, const ParamBinding& binding) {
    Env env = binding;
    return eval_ev(*expr, env).to_pivalue();
}

ExactValue eval_exact_value(const ExprPtr& expr, const ParamBinding& binding) {
    Env env = binding;
    return eval_ev(*expr, env);
}

Rational eval_scalar(const ExprPtr& expr, const ParamBinding& binding) {
    Env env = binding;
    return eval_rat(*expr, env);
}

BigFloat eval_numeric(const ExprPtr& expr, const ParamBinding& binding,
                      int digits) {
    Env env = binding;
    NumCtx cx{digits, BigFloat::bits_for_digits(digits + 10)};
    return eval_num(*expr, env, cx);
}

bool predicate_holds(const Predicate& pred, const ParamBinding& binding) {
    for (const auto& c : pred.clauses) {
        Env env = binding;
        if (!compare(c.op, eval_rat(*c.lhs, env), eval_rat(*c.rhs, env)))
            return false;
    }
    return true;
}

const CasedRhs* select_case(const Identity& ident,
                            const ParamBinding& binding) {
    for (const auto& cs : ident.rhs) {
        switch (cs.guard.kind) {
            case GuardKind::Always:
                return &cs;
            case GuardKind::EvenParam:
            case GuardKind::OddParam: {
                auto it = binding.find(cs.guard.param);
                if (it == binding.end()) throw UnboundParam(cs.guard.param);
                if (!is_integer(it->second)) continue;
                bool even = mpz_even_p(it->second.get_num().get_mpz_t()) != 0;
                if (even == (cs.guard.kind == GuardKind::EvenParam)) return &cs;
                break;
            }
            case GuardKind::NonZeroParam: {
                auto it = binding.find(cs.guard.param);
                if (it == binding.end()) throw UnboundParam(cs.guard.param);
                if (it->second != 0) return &cs;
                break;
            }
        }
    }
    return nullptr;
}

const char* status_name(Status s) {
    switch (s) {
        case Status::ExactEqual: return "ExactEqual";
        case Status::NumericEqual: return "NumericEqual";
        case Status::Mismatch: return "Mismatch";
        case Status::Skipped: return "Skipped";
    }
    return "?";
}

VerificationResult verify_instance(const Identity& ident,
                                   const ParamBinding& binding,
                                   const VerifyMode& mode) {
    VerificationResult r;
    r.id = ident.id;
    r.binding = binding;
    try {
        if (!predicate_holds(ident.validity, binding)) {
            r.status = Status::Skipped;
            r.note = "outside validity domain";
            return r;
        }
        const CasedRhs* cs = select_case(ident, binding);
        if (!cs) {
            r.status = Status::Skipped;
            r.note = "no guard fires";
            return r;
        }
        if (!mode.numeric) {
            ExactValue l = eval_exact_value(ident.lhs, binding);
            ExactValue rv = eval_exact_value(cs->expr, binding);
            r.lhs = canonical_str(l);
            r.rhs = canonical_str(rv);
            r.status = l == rv ? Status::ExactEqual : Status::Mismatch;
            return r;
        }
        BigFloat l = eval_numeric(ident.lhs, binding, mode.digits);
        BigFloat rv = eval_numeric(cs->expr, binding, mode.digits);
        r.lhs = l.str(mode.digits);
        r.rhs = rv.str(mode.digits);
        BigFloat diff = (l - rv).abs();
        BigFloat scale = l.abs();
        if (rv.abs() > scale) scale = rv.abs();
        // Floor the scale at 1 so that an exact zero against alternating
        // cancellation dust compares absolutely instead of blowing up
        // the quotient.
        mpfr_prec_t prec = BigFloat::bits_for_digits(mode.digits + 10);
        BigFloat floor_scale = BigFloat::from_long(1, prec);
        if (scale < floor_scale) scale = floor_scale;
        BigFloat rel = diff / scale;
        r.relerr = rel.to_double();
        BigFloat thresh = BigFloat::pow10(-(mode.digits - 6), prec);
        r.status = diff <= thresh * scale ? Status::NumericEqual
                                          : Status::Mismatch;
        return r;
    } catch (const Error& ex) {
        r.status = Status::Skipped;
        r.note = ex.what();
        return r;
    }
}

std::vector<VerificationResult> sweep(const Identity& ident,
                                      const SweepRanges& ranges,
                                      const VerifyMode& mode, int jobs) {
    for (const auto& [name, values] : ranges) {
        if (!ident.find_param(name))
            throw ConfigError("range given for undeclared parameter " + name);
        if (values.empty())
            throw ConfigError("empty range for parameter " + name);
    }
    // bindings in lexicographic order over the declared parameter order
    std::vector<ParamBinding> bindings;
    std::vector<const std::vector<Rational>*> lists;
    std::vector<std::string> names;
    for (const auto& p : ident.params) {
        auto it = ranges.find(p.name);
        if (it == ranges.end())
            throw ConfigError("no range for parameter " + p.name);
        names.push_back(p.name);
        lists.push_back(&it->second);
    }
    std::vector<size_t> idx(lists.size(), 0);
    for (bool done = false; !done;) {
        ParamBinding b;
        for (size_t i = 0; i < lists.size(); ++i)
            b[names[i]] = (*lists[i])[idx[i]];
        bindings.push_back(std::move(b));
        done = true;
        for (size_t i = lists.size(); i-- > 0;) {
            if (++idx[i] < lists[i]->size()) {
                done = false;
                break;
            }
            idx[i] = 0;
        }
    }

    std::vector<VerificationResult> results(bindings.size());
    if (jobs <= 1 || bindings.size() < 2) {
        for (size_t i = 0; i < bindings.size(); ++i)
            results[i] = verify_instance(ident, bindings[i], mode);
        return results;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= bindings.size()) return;
            results[i] = verify_instance(ident, bindings[i], mode);
        }
    };
    std::vector<std::thread> pool;
    int nthreads = std::min<size_t>(jobs, bindings.size());
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return results;
}

}  // namespace binomid
