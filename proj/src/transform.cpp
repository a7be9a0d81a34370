#include "binomid/transform.hpp"

#include <algorithm>
#include <functional>

#include "binomid/errors.hpp"

namespace binomid {

namespace {

using ast::altsign;
using ast::binom;
using ast::binomg;
using ast::binominv;
using ast::ceil2;
using ast::floor2;
using ast::lit;
using ast::mul;
using ast::neg;
using ast::param;
using ast::sub;

ExprPtr add(std::vector<ExprPtr> es) { return ast::add(std::move(es)); }
ExprPtr add(ExprPtr a, ExprPtr b) {
    return ast::add({std::move(a), std::move(b)});
}
ExprPtr L(long v) { return lit(v); }
ExprPtr inv(ExprPtr e) { return ast::pow(std::move(e), -1); }
ExprPtr half(ExprPtr e) { return mul({std::move(e), lit(make_rational(1, 2))}); }
ExprPtr p2(ExprPtr e) { return ast::pow(L(2), std::move(e)); }
ExprPtr S(ExprPtr lo, ExprPtr hi, ExprPtr body) {
    return ast::sum("k", std::move(lo), std::move(hi), std::move(body));
}

// e with every free occurrence of `name` replaced by `rep`.
ExprPtr subst(const ExprPtr& e, const std::string& name, const ExprPtr& rep) {
    switch (e->kind) {
        case NodeKind::ParamRef:
        case NodeKind::Var:
            return e->name == name ? rep : e;
        case NodeKind::IntLit:
        case NodeKind::RatLit:
            return e;
        case NodeKind::Sum:
            if (e->name == name)  // inner binder shadows; bounds still free
                return ast::node(e->kind, e->value, e->name,
                                 {subst(e->kids[0], name, rep),
                                  subst(e->kids[1], name, rep), e->kids[2]});
            [[fallthrough]];
        default: {
            std::vector<ExprPtr> kids;
            kids.reserve(e->kids.size());
            for (const auto& k : e->kids) kids.push_back(subst(k, name, rep));
            return ast::node(e->kind, e->value, e->name, std::move(kids));
        }
    }
}

ExprPtr apply_map(const IndexMap& mp, const ExprPtr& k) {
    if (mp.is_identity()) return k;
    ExprPtr scaled = mp.a == 1 ? k : mul({L(mp.a), k});
    return mp.b == 0 ? scaled : add(scaled, L(mp.b));
}

// ------------------------------------------------------------ emission glue

struct Ctx {
    const std::vector<ParamDecl>* base = nullptr;
    std::vector<ParamDecl> extra;
    Predicate validity;
    std::string suffix;  // "(u=...,v=...)" for concrete arguments

    ExprPtr grid(const GridArg& g, const char* letter) {
        if (g) {
            if (!on_half_grid(*g))
                throw OutOfDomain(std::string(letter) +
                                  " off the half-integer grid: " +
                                  rational_str(*g));
            if (*g <= -1)
                throw OutOfDomain(std::string(letter) + " must exceed -1, got " +
                                  rational_str(*g));
            suffix += (suffix.empty() ? "(" : ",") + std::string(letter) + "=" +
                      rational_str(*g);
            return lit(*g);
        }
        for (const auto& p : *base)
            if (p.name == letter)
                throw ShapeMismatch(std::string("parameter name collision: ") +
                                    letter);
        extra.push_back({letter, ParamKind::GridReal});
        validity.clauses.push_back({param(letter), CmpOp::Gt, L(-1)});
        return param(letter);
    }

    bool is_zero(const GridArg& g) const { return g && *g == 0; }

    // Require expr(k) > -1 for every k in [lo, hi]; expr is affine in k,
    // so checking both endpoints suffices.
    void index_clause(const ExprPtr& tmpl, const ExprPtr& lo,
                      const ExprPtr& hi) {
        validity.clauses.push_back({subst(tmpl, "k", lo), CmpOp::Gt, L(-1)});
        validity.clauses.push_back({subst(tmpl, "k", hi), CmpOp::Gt, L(-1)});
    }

    Identity finish(const std::string& base_name, const std::string& op,
                    ExprPtr lhs, ExprPtr rhs) {
        Identity ident;
        ident.id = base_name + ":" + op + (suffix.empty() ? "" : suffix + ")");
        // naturals, then the new grid letters, then grids, then free vars
        for (const auto& p : *base)
            if (p.kind == ParamKind::Natural) ident.params.push_back(p);
        for (const auto& p : extra) ident.params.push_back(p);
        for (const auto& p : *base)
            if (p.kind == ParamKind::GridReal) ident.params.push_back(p);
        for (const auto& p : *base)
            if (p.kind == ParamKind::FreeRational) ident.params.push_back(p);
        ident.lhs = std::move(lhs);
        ident.rhs = {{Guard{GuardKind::Always, ""}, std::move(rhs)}};
        ident.validity = std::move(validity);
        ident.source = "derived from " + base_name;
        return ident;
    }
};

// Every emitted identity is swept over a small admissible grid before it
// is handed out; a mismatch means the emission itself is wrong.
void closure_check(const Identity& ident) {
    SweepRanges r;
    for (const auto& p : ident.params) {
        switch (p.kind) {
            case ParamKind::Natural:
                r[p.name] = {Rational(0), Rational(1), Rational(2), Rational(3),
                             Rational(4)};
                break;
            case ParamKind::GridReal:
                r[p.name] = {Rational(0), make_rational(1, 2), Rational(1),
                             Rational(2)};
                break;
            case ParamKind::FreeRational:
                r[p.name] = {Rational(0), Rational(1), Rational(2),
                             make_rational(-1, 2)};
                break;
        }
    }
    auto results = sweep(ident, r, VerifyMode{}, 1);
    for (const auto& x : results)
        if (x.status == Status::Mismatch)
            throw TransformError("emitted identity '" + ident.id +
                                 "' fails verification at " +
                                 binding_str(x.binding) + ": lhs=" + x.lhs +
                                 " rhs=" + x.rhs);
}

Identity emit(Ctx& ctx, const std::string& base_name, const std::string& op,
              ExprPtr lhs, ExprPtr rhs) {
    Identity ident = ctx.finish(base_name, op, std::move(lhs), std::move(rhs));
    closure_check(ident);
    return ident;
}

ParamBinding to_binding(const std::vector<std::pair<std::string, Rational>>& v) {
    ParamBinding b;
    for (const auto& [k, q] : v) b[k] = q;
    return b;
}

// Cartesian walk over named value lists, in list order.
void for_each_binding(
    const std::vector<std::pair<std::string, std::vector<Rational>>>& axes,
    const std::function<void(const ParamBinding&)>& fn) {
    if (axes.empty()) {
        fn({});
        return;
    }
    std::vector<size_t> idx(axes.size(), 0);
    for (bool done = false; !done;) {
        std::vector<std::pair<std::string, Rational>> vals;
        for (size_t i = 0; i < axes.size(); ++i)
            vals.emplace_back(axes[i].first, axes[i].second[idx[i]]);
        fn(to_binding(vals));
        size_t i = axes.size();
        while (i > 0) {
            --i;
            if (++idx[i] < axes[i].second.size()) break;
            idx[i] = 0;
            if (i == 0) done = true;
        }
    }
}

std::vector<std::pair<std::string, std::vector<Rational>>> axes_for(
    const std::vector<ParamDecl>& params, const SweepRanges& ranges) {
    std::vector<std::pair<std::string, std::vector<Rational>>> axes;
    for (const auto& p : params) {
        auto it = ranges.find(p.name);
        if (it == ranges.end())
            throw ConfigError("no sample range for parameter " + p.name);
        axes.emplace_back(p.name, it->second);
    }
    return axes;
}

}  // namespace

// ------------------------------------------------------------- registration

StandardFormIdentity register_standard_form(StandardFormIdentity sf) {
    ExprPtr k = param("k"), t = param("t");
    ExprPtr lhs = S(sf.s, sf.n,
                    mul({sf.f, ast::pow(add(L(1), t), apply_map(sf.p, k))}));
    ExprPtr rhs = S(sf.m, sf.r, mul({sf.g, ast::pow(t, apply_map(sf.q, k))}));
    auto axes = axes_for(sf.params, sf.sample_ranges);
    axes.emplace_back("t", std::vector<Rational>{Rational(0), Rational(1),
                                                 make_rational(-1, 2)});
    for_each_binding(axes, [&](const ParamBinding& b) {
        if (!predicate_holds(sf.validity, b)) return;
        ExactValue l = eval_exact_value(lhs, b);
        ExactValue r = eval_exact_value(rhs, b);
        if (!(l == r))
            throw TransformError("standard form '" + sf.name +
                                 "' is not a polynomial identity at " +
                                 binding_str(b) + ": " + l.str() +
                                 " != " + r.str());
    });
    return sf;
}

SymmetricXYIdentity register_symmetric_form(SymmetricXYIdentity sym) {
    ExprPtr x = param("x"), y = param("y");
    ExprPtr lhs = S(sym.k_lo, sym.k_hi,
                    mul({sym.F, ast::pow(mul({x, y}), param("k")),
                         ast::pow(add(x, y), sym.wexp)}));
    ExprPtr rhs = S(sym.j_lo, sym.j_hi,
                    mul({sym.G, ast::pow(x, sym.xe), ast::pow(y, sym.ye)}));
    auto axes = axes_for(sym.params, sym.sample_ranges);
    std::vector<Rational> xy = {Rational(0), Rational(1), Rational(2),
                                make_rational(-1, 2), Rational(3)};
    axes.emplace_back("x", xy);
    axes.emplace_back("y", xy);
    for_each_binding(axes, [&](const ParamBinding& b) {
        if (!predicate_holds(sym.validity, b)) return;
        ExactValue l = eval_exact_value(lhs, b);
        ExactValue r = eval_exact_value(rhs, b);
        if (!(l == r))
            throw TransformError("symmetric form '" + sym.name +
                                 "' is not a polynomial identity at " +
                                 binding_str(b) + ": " + l.str() +
                                 " != " + r.str());
    });
    return sym;
}

// ---------------------------------------------------------- built-in inputs

const std::vector<StandardFormIdentity>& standard_forms() {
    static const std::vector<StandardFormIdentity> forms = [] {
        std::vector<StandardFormIdentity> out;
        ExprPtr n = param("n"), k = param("k"), x = param("x");
        SweepRanges nx = {{"n",
                           {Rational(0), Rational(1), Rational(2), Rational(3),
                            Rational(4), Rational(5), Rational(6)}},
                          {"x",
                           {Rational(0), Rational(1), Rational(2),
                            make_rational(-1, 2)}}};

        StandardFormIdentity binomial;
        binomial.name = "binomial";
        binomial.f = mul({altsign(sub(n, k)), binom(n, k),
                          ast::pow(sub(L(1), x), sub(n, k))});
        binomial.g = mul({binom(n, k), ast::pow(x, sub(n, k))});
        binomial.s = L(0);
        binomial.m = L(0);
        binomial.n = n;
        binomial.r = n;
        binomial.params = {{"n", ParamKind::Natural},
                           {"x", ParamKind::FreeRational}};
        binomial.sample_ranges = nx;
        out.push_back(register_standard_form(std::move(binomial)));

        StandardFormIdentity binx;
        binx.name = "binomial-x";
        binx.f = mul({binom(n, k), ast::pow(sub(L(1), x), k),
                      ast::pow(x, sub(n, k))});
        binx.g = mul({binom(n, k), ast::pow(sub(L(1), x), k)});
        binx.s = L(0);
        binx.m = L(0);
        binx.n = n;
        binx.r = n;
        binx.params = {{"n", ParamKind::Natural},
                       {"x", ParamKind::FreeRational}};
        binx.sample_ranges = nx;
        out.push_back(register_standard_form(std::move(binx)));

        StandardFormIdentity simons;
        simons.name = "simons";
        simons.f = mul({altsign(sub(n, k)), binom(n, k), binom(add(n, k), k)});
        simons.g = mul({binom(n, k), binom(add(n, k), k)});
        simons.s = L(0);
        simons.m = L(0);
        simons.n = n;
        simons.r = n;
        simons.params = {{"n", ParamKind::Natural}};
        simons.sample_ranges = {{"n",
                                 {Rational(0), Rational(1), Rational(2),
                                  Rational(3), Rational(4), Rational(5),
                                  Rational(6)}}};
        out.push_back(register_standard_form(std::move(simons)));
        return out;
    }();
    return forms;
}

const std::vector<SymmetricXYIdentity>& symmetric_forms() {
    static const std::vector<SymmetricXYIdentity> forms = [] {
        std::vector<SymmetricXYIdentity> out;
        ExprPtr n = param("n"), k = param("k");
        SweepRanges nr = {{"n",
                           {Rational(0), Rational(1), Rational(2), Rational(3),
                            Rational(4), Rational(5), Rational(6)}}};

        SymmetricXYIdentity waring;
        waring.name = "waring";
        waring.F = mul({altsign(k), n, inv(sub(n, k)), binom(sub(n, k), k)});
        waring.wexp = sub(n, mul({L(2), k}));
        waring.k_lo = L(0);
        waring.k_hi = floor2(n);
        waring.G = L(1);
        waring.xe = mul({n, sub(L(1), k)});
        waring.ye = mul({n, k});
        waring.j_lo = L(0);
        waring.j_hi = L(1);
        waring.params = {{"n", ParamKind::Natural}};
        waring.validity.clauses.push_back({n, CmpOp::Ge, L(1)});
        waring.sample_ranges = nr;
        out.push_back(register_symmetric_form(std::move(waring)));

        SymmetricXYIdentity dual;
        dual.name = "waring-dual";
        dual.F = mul({altsign(k), binom(sub(n, k), k)});
        dual.wexp = sub(n, mul({L(2), k}));
        dual.k_lo = L(0);
        dual.k_hi = floor2(n);
        dual.G = L(1);
        dual.xe = sub(n, k);
        dual.ye = k;
        dual.j_lo = L(0);
        dual.j_hi = n;
        dual.params = {{"n", ParamKind::Natural}};
        dual.sample_ranges = nr;
        out.push_back(register_symmetric_form(std::move(dual)));
        return out;
    }();
    return forms;
}

const StandardFormIdentity& standard_form(const std::string& name) {
    for (const auto& f : standard_forms())
        if (f.name == name) return f;
    throw UnknownId(name);
}

const SymmetricXYIdentity& symmetric_form(const std::string& name) {
    for (const auto& f : symmetric_forms())
        if (f.name == name) return f;
    throw UnknownId(name);
}

// ------------------------------------------------------------------ the ops

Identity t_beta01(const StandardFormIdentity& sf, const GridArg& u,
                  const GridArg& v) {
    Ctx ctx;
    ctx.base = &sf.params;
    ctx.validity = sf.validity;
    ExprPtr U = ctx.grid(u, "u"), V = ctx.grid(v, "v");
    ExprPtr k = param("k");
    ExprPtr P = apply_map(sf.p, k), Q = apply_map(sf.q, k);
    ExprPtr lhs, rhs;
    if (ctx.is_zero(u) && ctx.is_zero(v)) {
        lhs = S(sf.s, sf.n, mul({sf.f, inv(add(P, L(1)))}));
        rhs = S(sf.m, sf.r, mul({altsign(Q), sf.g, inv(add(Q, L(1)))}));
    } else {
        lhs = S(sf.s, sf.n,
                mul({sf.f, binominv(add({P, U, V, L(1)}), add(U, L(1)))}));
        rhs = mul({add(U, L(1)), inv(add(V, L(1))),
                   S(sf.m, sf.r,
                     mul({altsign(Q), sf.g,
                          binominv(add({Q, U, V, L(1)}), add(V, L(1)))}))});
    }
    return emit(ctx, sf.name, "beta01", std::move(lhs), std::move(rhs));
}

std::pair<Identity, Identity> t_xy_pair(const StandardFormIdentity& sf,
                                        const GridArg& u, const GridArg& v) {
    ExprPtr k = param("k");
    auto build = [&](bool mirror) {
        Ctx ctx;
        ctx.base = &sf.params;
        ctx.validity = sf.validity;
        ExprPtr U = ctx.grid(u, "u"), V = ctx.grid(v, "v");
        ExprPtr P = apply_map(sf.p, k), Q = apply_map(sf.q, k);
        ExprPtr E1 = add(mul({L(2), sub(U, P)}), V);  // 2(u-p)+v
        ExprPtr E2 = add(mul({L(2), sub(U, Q)}), V);  // 2(u-q)+v
        ExprPtr E3 = add(mul({L(2), Q}), V);          // 2q+v
        ExprPtr E4 = add(mul({L(2), P}), V);          // 2p+v
        ctx.index_clause(E1, sf.s, sf.n);
        ctx.index_clause(E2, sf.m, sf.r);
        ctx.index_clause(E3, sf.m, sf.r);
        ExprPtr lhs, rhs;
        if (ctx.is_zero(v)) {
            if (!mirror) {
                lhs = S(sf.s, sf.n,
                        mul({sf.f, p2(mul({L(2), P})),
                             binomg(mul({L(2), sub(U, P)}), sub(U, P))}));
                rhs = S(sf.m, sf.r,
                        mul({sf.g, binomg(mul({L(2), sub(U, Q)}), sub(U, Q)),
                             binom(mul({L(2), Q}), Q), binominv(U, Q)}));
            } else {
                lhs = S(sf.m, sf.r,
                        mul({altsign(Q), sf.g, p2(mul({L(2), Q})),
                             binomg(mul({L(2), sub(U, Q)}), sub(U, Q))}));
                rhs = S(sf.s, sf.n,
                        mul({altsign(P), sf.f,
                             binomg(mul({L(2), sub(U, P)}), sub(U, P)),
                             binom(mul({L(2), P}), P), binominv(U, P)}));
            }
        } else if (!mirror) {
            lhs = S(sf.s, sf.n,
                    mul({sf.f, p2(mul({L(2), P})), binomg(E1, half(E1)),
                         binominv(add(sub(U, P), V), half(V))}));
            rhs = mul({binominv(V, half(V)),
                       S(sf.m, sf.r,
                         mul({sf.g, binomg(E2, half(E2)), binomg(E3, half(E3)),
                              binominv(add(U, V), half(E3))}))});
        } else {
            lhs = S(sf.m, sf.r,
                    mul({altsign(Q), sf.g, p2(mul({L(2), Q})),
                         binomg(E2, half(E2)),
                         binominv(add(sub(U, Q), V), half(V))}));
            rhs = mul({binominv(V, half(V)),
                       S(sf.s, sf.n,
                         mul({altsign(P), sf.f, binomg(E1, half(E1)),
                              binomg(E4, half(E4)),
                              binominv(add(U, V), half(E4))}))});
        }
        return emit(ctx, sf.name, mirror ? "xy-mirror" : "xy", std::move(lhs),
                    std::move(rhs));
    };
    Identity fwd = build(false);
    Identity mir = build(true);
    return {std::move(fwd), std::move(mir)};
}

Identity t_xy_pair(const SymmetricXYIdentity& sym, const GridArg& v) {
    Ctx ctx;
    ctx.base = &sym.params;
    ctx.validity = sym.validity;
    ExprPtr V = ctx.grid(v, "v");
    ExprPtr k = param("k");
    ExprPtr twok = mul({L(2), k});
    ExprPtr lhs = S(
        sym.k_lo, sym.k_hi,
        mul({sym.F, p2(mul({L(-4), k})), binomg(add(twok, V), half(add(twok, V))),
             binom(twok, k),
             binominv(add(twok, half(V)), add(k, half(V)))}));
    ExprPtr ey2 = mul({L(2), sym.ye});
    ExprPtr ex2 = mul({L(2), sym.xe});
    ExprPtr rhs = S(
        sym.j_lo, sym.j_hi,
        mul({sym.G, p2(mul({L(-2), add(sym.xe, sym.ye)})),
             binomg(add(ey2, V), half(add(ey2, V))), binom(ex2, sym.xe),
             binominv(add({sym.xe, sym.ye, half(V)}),
                      add(sym.ye, half(V)))}));
    return emit(ctx, sym.name, "xy", std::move(lhs), std::move(rhs));
}

Identity t_y_minus1(const StandardFormIdentity& sf, const GridArg& u,
                    const GridArg& v) {
    Ctx ctx;
    ctx.base = &sf.params;
    ctx.validity = sf.validity;
    ExprPtr U = ctx.grid(u, "u"), V = ctx.grid(v, "v");
    ExprPtr k = param("k");
    ExprPtr P = apply_map(sf.p, k), Q = apply_map(sf.q, k);
    ctx.index_clause(sub(U, P), sf.s, sf.n);
    ctx.index_clause(add(P, V), sf.s, sf.n);
    ctx.index_clause(sub(U, Q), sf.m, sf.r);
    ExprPtr lhs, rhs;
    if (ctx.is_zero(v)) {
        lhs = S(sf.s, sf.n, mul({altsign(P), sf.f, binominv(U, P)}));
        rhs = mul({add(U, L(1)),
                   S(sf.m, sf.r,
                     mul({altsign(Q), sf.g, inv(add(sub(U, Q), L(1)))}))});
    } else {
        lhs = S(sf.s, sf.n,
                mul({altsign(P), sf.f, binominv(add(U, V), sub(U, P))}));
        rhs = mul({add({U, V, L(1)}), inv(add(V, L(1))),
                   S(sf.m, sf.r,
                     mul({altsign(Q), sf.g,
                          binominv(add({sub(U, Q), V, L(1)}),
                                   add(V, L(1)))}))});
    }
    return emit(ctx, sf.name, "y-minus1", std::move(lhs), std::move(rhs));
}

Identity t_sin_sub(const StandardFormIdentity& sf, const GridArg& u,
                   const GridArg& v) {
    Ctx ctx;
    ctx.base = &sf.params;
    ctx.validity = sf.validity;
    ExprPtr U = ctx.grid(u, "u"), V = ctx.grid(v, "v");
    ExprPtr k = param("k");
    ExprPtr P = apply_map(sf.p, k), Q = apply_map(sf.q, k);
    ExprPtr lhs, rhs;
    if (ctx.is_zero(u) && ctx.is_zero(v)) {
        lhs = S(sf.s, sf.n,
                mul({sf.f, p2(mul({L(-2), P})), binom(mul({L(2), P}), P)}));
        rhs = S(sf.m, sf.r,
                mul({altsign(Q), sf.g, p2(mul({L(-2), Q})),
                     binom(mul({L(2), Q}), Q)}));
    } else {
        ExprPtr PU = add(mul({L(2), P}), U);
        ExprPtr QV = add(mul({L(2), Q}), V);
        lhs = S(sf.s, sf.n,
                mul({sf.f, p2(mul({L(-2), P})), binomg(V, half(V)),
                     binomg(PU, half(PU)),
                     binominv(half(add({mul({L(2), P}), U, V})), half(V))}));
        rhs = S(sf.m, sf.r,
                mul({altsign(Q), sf.g, p2(mul({L(-2), Q})), binomg(U, half(U)),
                     binomg(QV, half(QV)),
                     binominv(half(add({mul({L(2), Q}), U, V})), half(U))}));
    }
    return emit(ctx, sf.name, "sin-sub", std::move(lhs), std::move(rhs));
}

Identity t_cos_parity(const StandardFormIdentity& sf, const GridArg& v,
                      ParitySide side) {
    Ctx ctx;
    ctx.base = &sf.params;
    ctx.validity = sf.validity;
    ExprPtr V = ctx.grid(v, "v");
    bool v0 = ctx.is_zero(v);
    ExprPtr k = param("k");

    // The side that keeps its (1+t)- resp. sign-weighted shape.
    const IndexMap& keep = side == ParitySide::ForwardOnQ ? sf.p : sf.q;
    const IndexMap& split = side == ParitySide::ForwardOnQ ? sf.q : sf.p;
    const ExprPtr& keep_fg = side == ParitySide::ForwardOnQ ? sf.f : sf.g;
    const ExprPtr& split_fg = side == ParitySide::ForwardOnQ ? sf.g : sf.f;
    const ExprPtr& keep_lo = side == ParitySide::ForwardOnQ ? sf.s : sf.m;
    const ExprPtr& keep_hi = side == ParitySide::ForwardOnQ ? sf.n : sf.r;
    const ExprPtr& split_lo = side == ParitySide::ForwardOnQ ? sf.m : sf.s;
    const ExprPtr& split_hi = side == ParitySide::ForwardOnQ ? sf.r : sf.n;

    ExprPtr P = apply_map(keep, k);
    ExprPtr keep_term;
    if (v0) {
        keep_term = mul({keep_fg, p2(neg(P)), binom(mul({L(2), P}), P)});
    } else {
        ExprPtr PV = add(mul({L(2), P}), V);
        keep_term = mul({keep_fg, p2(neg(P)), binomg(PV, half(PV)),
                         binominv(add(P, V), half(V))});
    }
    if (side == ParitySide::ReverseOnP)
        keep_term = mul({altsign(P), keep_term});
    ExprPtr lhs = S(keep_lo, keep_hi, std::move(keep_term));

    // Split-side terms survive only at even exponents.
    auto branch_term = [&](const ExprPtr& idx) {
        ExprPtr g2 = subst(split_fg, "k", idx);
        ExprPtr Q2 = apply_map(split, idx);
        ExprPtr term;
        if (v0) {
            term = mul({g2, p2(neg(Q2)), binomg(Q2, half(Q2))});
        } else {
            term = mul({g2, p2(neg(Q2)), binomg(Q2, half(Q2)),
                        binominv(half(add(Q2, V)), half(V))});
        }
        if (side == ParitySide::ReverseOnP) term = mul({altsign(Q2), term});
        return term;
    };

    ExprPtr rhs;
    bool a_odd = (split.a % 2 + 2) % 2 == 1;
    bool b_even = (split.b % 2 + 2) % 2 == 0;
    if (a_odd) {
        if (b_even) {
            // even exponents sit at even indices: k -> 2k
            rhs = S(floor2(add(split_lo, L(1))), floor2(split_hi),
                    branch_term(mul({L(2), param("k")})));
        } else {
            // even exponents sit at odd indices: k -> 2k-1
            rhs = S(floor2(add(split_lo, L(2))), ceil2(split_hi),
                    branch_term(sub(mul({L(2), param("k")}), L(1))));
        }
    } else if (b_even) {
        // every exponent even: no term vanishes, no re-indexing
        rhs = S(split_lo, split_hi, branch_term(param("k")));
    } else {
        // every exponent odd: the whole side integrates to zero
        rhs = L(0);
    }
    return emit(ctx, sf.name,
                side == ParitySide::ForwardOnQ ? "cos-parity" : "cos-parity-rev",
                std::move(lhs), std::move(rhs));
}

std::pair<Identity, Identity> t_power_form(const StandardFormIdentity& sf,
                                           const GridArg& v) {
    if (!sf.p.is_identity() || !sf.q.is_identity())
        throw ShapeMismatch("power form requires identity exponent maps on '" +
                            sf.name + "'");
    Identity fwd = t_cos_parity(sf, v, ParitySide::ForwardOnQ);
    Identity mir = t_cos_parity(sf, v, ParitySide::ReverseOnP);
    auto rename = [](Identity& ident, const std::string& op) {
        size_t paren = ident.id.find('(');
        size_t colon = ident.id.find(':');
        std::string args =
            paren == std::string::npos ? "" : ident.id.substr(paren);
        ident.id = ident.id.substr(0, colon + 1) + op + args;
    };
    rename(fwd, "power");
    rename(mir, "power-mirror");
    return {std::move(fwd), std::move(mir)};
}

Identity t_sym_sin(const SymmetricXYIdentity& sym, const GridArg& v) {
    Ctx ctx;
    ctx.base = &sym.params;
    ctx.validity = sym.validity;
    ExprPtr V = ctx.grid(v, "v");
    bool v0 = ctx.is_zero(v);
    ExprPtr k = param("k");
    ExprPtr twok = mul({L(2), k});
    ExprPtr lhs, rhs;
    ExprPtr ex2 = mul({L(2), sym.xe});
    ExprPtr ey2 = mul({L(2), sym.ye});
    if (v0) {
        lhs = S(sym.k_lo, sym.k_hi,
                mul({sym.F, p2(mul({L(-4), k})), binom(twok, k)}));
        rhs = S(sym.j_lo, sym.j_hi,
                mul({sym.G, p2(mul({L(-2), add(sym.xe, sym.ye)})),
                     binom(ey2, sym.ye), binom(ex2, sym.xe),
                     binominv(add(sym.xe, sym.ye), sym.ye)}));
    } else {
        lhs = S(sym.k_lo, sym.k_hi,
                mul({sym.F, p2(mul({L(-4), k})),
                     binomg(add(twok, V), half(add(twok, V)))}));
        rhs = S(sym.j_lo, sym.j_hi,
                mul({sym.G, p2(mul({L(-2), add(sym.xe, sym.ye)})),
                     binomg(add(ey2, V), half(add(ey2, V))),
                     binomg(add(ex2, V), half(add(ex2, V))),
                     binominv(add({sym.xe, sym.ye, V}),
                              half(add(ey2, V)))}));
    }
    return emit(ctx, sym.name, "sym-sin", std::move(lhs), std::move(rhs));
}

// -------------------------------------------------------------- comparison

bool extensionally_equal(const Identity& a, const Identity& b,
                         const SweepRanges& ranges) {
    std::vector<std::pair<std::string, std::vector<Rational>>> axes;
    for (const auto& [name, vals] : ranges) axes.emplace_back(name, vals);
    bool all_equal = true;
    size_t compared = 0;
    for_each_binding(axes, [&](const ParamBinding& full) {
        if (!all_equal) return;
        auto restrict_to = [&](const Identity& ident) {
            ParamBinding b;
            for (const auto& p : ident.params) {
                auto it = full.find(p.name);
                if (it == full.end())
                    throw ConfigError("no sample range for parameter " +
                                      p.name);
                b[p.name] = it->second;
            }
            return b;
        };
        try {
            ParamBinding ba = restrict_to(a), bb = restrict_to(b);
            if (!predicate_holds(a.validity, ba) ||
                !predicate_holds(b.validity, bb))
                return;
            const CasedRhs* ca = select_case(a, ba);
            const CasedRhs* cb = select_case(b, bb);
            if (!ca || !cb) return;
            if (!(eval_exact_value(a.lhs, ba) == eval_exact_value(b.lhs, bb)) ||
                !(eval_exact_value(ca->expr, ba) ==
                  eval_exact_value(cb->expr, bb))) {
                all_equal = false;
                return;
            }
            ++compared;
        } catch (const Error&) {
            // inadmissible binding for one of the two shapes
        }
    });
    return all_equal && compared > 0;
}

}  // namespace binomid
