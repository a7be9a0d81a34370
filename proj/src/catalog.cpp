#include "binomid/catalog.hpp"

#include <mutex>

#include "binomid/errors.hpp"

namespace binomid {

namespace {

using ast::add;
using ast::altsign;
using ast::binom;
using ast::binomg;
using ast::binominv;
using ast::cat;
using ast::ceil2;
using ast::floor2;
using ast::lit;
using ast::mul;
using ast::neg;
using ast::param;
using ast::sub;

ExprPtr add(ExprPtr a, ExprPtr b) {
    return ast::add({std::move(a), std::move(b)});
}

ExprPtr L(long v) { return lit(v); }
ExprPtr Rl(long n, long d) { return lit(make_rational(n, d)); }
ExprPtr pw(ExprPtr b, ExprPtr e) { return ast::pow(std::move(b), std::move(e)); }
ExprPtr pw(ExprPtr b, long e) { return ast::pow(std::move(b), e); }
ExprPtr inv(ExprPtr e) { return ast::pow(std::move(e), -1); }
ExprPtr half(ExprPtr e) { return mul({std::move(e), Rl(1, 2)}); }
ExprPtr p2(ExprPtr e) { return pw(L(2), std::move(e)); }  // 2^e
// central binomial C(2e, e) for integer-valued e
ExprPtr cb(ExprPtr e) { return binom(mul({L(2), e}), e); }
ExprPtr S(ExprPtr lo, ExprPtr hi, ExprPtr body) {
    return ast::sum("k", std::move(lo), std::move(hi), std::move(body));
}

CasedRhs even_(const char* p, ExprPtr e) {
    return {{GuardKind::EvenParam, p}, std::move(e)};
}
CasedRhs odd_(const char* p, ExprPtr e) {
    return {{GuardKind::OddParam, p}, std::move(e)};
}
CasedRhs always_(ExprPtr e) { return {{GuardKind::Always, ""}, std::move(e)}; }

Comparison ge1(const char* p) { return {param(p), CmpOp::Ge, L(1)}; }
Comparison ne_params(const char* a, const char* b) {
    return {param(a), CmpOp::Ne, param(b)};
}

struct Builder {
    std::vector<CatalogEntry> out;

    void entry(std::string id, std::vector<ParamDecl> params, ExprPtr lhs,
               std::vector<CasedRhs> rhs, Predicate validity, std::string loc,
               std::string quote, std::vector<std::string> tags) {
        CatalogEntry e;
        e.identity.id = id;
        e.identity.params = std::move(params);
        e.identity.lhs = std::move(lhs);
        e.identity.rhs = std::move(rhs);
        e.identity.validity = std::move(validity);
        e.identity.source = loc;
        e.location = std::move(loc);
        e.quote = std::move(quote);
        e.tags = std::move(tags);
        bool single = e.identity.params.size() == 1;
        for (const auto& p : e.identity.params) {
            switch (p.kind) {
                case ParamKind::Natural:
                    e.default_ranges[p.name] =
                        single ? default_n_range_single() : default_n_range();
                    break;
                case ParamKind::GridReal:
                    e.default_ranges[p.name] = default_v_grid();
                    break;
                case ParamKind::FreeRational:
                    e.default_ranges[p.name] = default_xy_samples();
                    break;
            }
        }
        out.push_back(std::move(e));
    }
};

std::vector<CatalogEntry> build_catalog() {
    Builder b;
    ParamDecl N{"n", ParamKind::Natural};
    ParamDecl M{"m", ParamKind::Natural};
    ParamDecl V{"v", ParamKind::GridReal};
    ParamDecl U{"u", ParamKind::GridReal};
    ParamDecl X{"x", ParamKind::FreeRational};
    ParamDecl Y{"y", ParamKind::FreeRational};
    ExprPtr n = param("n"), m = param("m"), v = param("v"), u = param("u");
    ExprPtr x = param("x"), y = param("y"), k = param("k");
    ExprPtr k2 = mul({L(2), k});            // 2k
    ExprPtr k2m1 = sub(k2, L(1));           // 2k - 1
    ExprPtr tkv = add({k2, v});             // 2k + v
    ExprPtr tku = add({k2, u});             // 2k + u
    ExprPtr tkuv = add({k2, u, v});         // 2k + u + v
    ExprPtr n2 = mul({L(2), n});            // 2n

    // --- the alternating central-binomial sum and its relatives ---------

    b.entry("knuth", {N},
            S(L(0), n, mul({altsign(k), binom(n, k), p2(neg(k)), cb(k)})),
            {even_("n", mul({p2(neg(n)),
                             binom(n, mul({n, ast::pow(L(2), -1)}))})),
             odd_("n", L(0))},
            {}, "alternating central-binomial sum",
            "sum (-1)^k C(n,k) 2^(-k) C(2k,k) splits by the parity of n",
            {"knuth-family"});

    b.entry(
        "knuth-gen", {N, M},
        S(L(0), n,
          mul({altsign(k), binom(n, k), p2(add({neg(k), neg(m)})),
               binom(mul({L(2), add({k, m})}), add({k, m}))})),
        {even_("n", S(L(0), floor2(m),
                      mul({binom(m, k2), p2(add({neg(n), mul({L(-2), k})})),
                           binom(add({k2, n}), floor2(add({k2, n})))}))),
         odd_("n",
              neg(S(L(1), ceil2(m),
                    mul({binom(m, k2m1),
                         p2(add({neg(n), mul({L(-2), k}), L(1)})),
                         binom(add({k2, n, L(-1)}),
                               floor2(add({k2, n, L(-1)})))}))))},
        {}, "two-parameter extension of the alternating sum",
        "shifted central binomials C(2(k+m),k+m) under the alternating sum",
        {"knuth-family", "generalization"});

    b.entry("ilslov7", {N},
            S(L(0), floor2(n),
              mul({binom(n, k2), p2(sub(n, k2)), cb(k)})),
            {always_(cb(n))},
            {}, "even-index companion sum",
            "sum over even lower indices of C(n,2k) 2^(n-2k) C(2k,k)",
            {"riordan"});

    b.entry("ef9et5k", {N},
            S(L(1), ceil2(n),
              mul({binom(n, k2m1), p2(add({n, mul({L(-2), k})})), cb(k)})),
            {always_(add({mul({Rl(1, 2), cb(add(n, L(1)))}), neg(cb(n))}))},
            {}, "odd-index companion sum",
            "sum over odd lower indices of C(n,2k-1) 2^(n-2k) C(2k,k)",
            {"riordan"});

    b.entry("ef9et5k-alt", {N},
            S(L(1), ceil2(n),
              mul({binom(n, k2m1), p2(add({n, mul({L(-2), k})})), cb(k)})),
            {always_(mul({n, inv(add(n, L(1))), cb(n)}))},
            {}, "odd-index companion sum, ratio form",
            "same left side with right side (n/(n+1)) C(2n,n)",
            {"riordan"});

    b.entry("complement1", {N},
            S(L(0), n, mul({altsign(k), cb(k), cb(sub(n, k))})),
            {even_("n", mul({p2(n), binom(n, floor2(n))})), odd_("n", L(0))},
            {}, "alternating convolution of central binomials",
            "sum (-1)^k C(2k,k) C(2(n-k),n-k) splits by the parity of n",
            {"convolution"});

    b.entry("complement2", {N},
            S(L(0), n, mul({cb(sub(n, k)), cb(k)})),
            {always_(ast::pow(L(4), n))},
            {}, "convolution of central binomials",
            "sum C(2(n-k),n-k) C(2k,k) equals 4^n",
            {"convolution"});

    // --- the (n, m, v) master identity and its specializations ----------

    {
        ExprPtr t1 = add({k2, mul({L(2), m}), v});
        ExprPtr t2 = add({k2, n});
        ExprPtr t3 = add({k2, n, L(-1)});
        b.entry(
            "r9e10tq", {N, M, V},
            S(L(0), n,
              mul({altsign(k), binom(n, k), p2(add({neg(k), neg(m)})),
                   binomg(t1, half(t1)), binominv(add({k, m, v}), half(v))})),
            {even_("n",
                   S(L(0), floor2(m),
                     mul({binom(m, k2), p2(add({neg(n), mul({L(-2), k})})),
                          binomg(t2, half(t2)),
                          binominv(half(add({k2, n, v})), half(t2))}))),
             odd_("n",
                  neg(S(L(1), ceil2(m),
                        mul({binom(m, k2m1),
                             p2(add({neg(n), mul({L(-2), k}), L(1)})),
                             binomg(t3, half(t3)),
                             binominv(half(add({k2, n, L(-1), v})),
                                      half(t3))}))))},
            {}, "three-parameter master identity",
            "alternating sum with shifted generalized central binomials in v",
            {"knuth-family", "generalization"});
    }

    b.entry("hdj69wz", {N, V},
            S(L(0), n,
              mul({altsign(k), binom(n, k), p2(neg(k)),
                   binomg(tkv, half(tkv)), binominv(add({k, v}), half(v))})),
            {even_("n", mul({p2(neg(n)), binom(n, floor2(n)),
                             binominv(half(add({n, v})), half(v))})),
             odd_("n", L(0))},
            {}, "one-parameter v-extension of the alternating sum",
            "generalized central binomial C(2k+v,(2k+v)/2) under the sum",
            {"knuth-family", "generalization"});

    {
        ExprPtr t2n = add({n2, v});
        b.entry("y6pnymc", {N, V},
                S(L(0), floor2(n),
                  mul({binom(n, k2), p2(mul({L(-2), k})), cb(k),
                       binominv(half(tkv), k)})),
                {always_(mul({p2(neg(n)), binomg(t2n, half(t2n)),
                              binominv(add({n, v}), half(v))}))},
                {}, "even-index v-extension",
                "even-index sum with C((2k+v)/2,k)^(-1) weights",
                {"generalization"});
    }

    {
        ExprPtr ta = add({n2, v, L(2)});
        ExprPtr tb = add({n2, v});
        b.entry(
            "wf0mlz9", {N, V},
            S(L(1), ceil2(n),
              mul({binom(n, k2m1), p2(add({n, mul({L(-2), k})})), cb(k),
                   binominv(half(tkv), k)})),
            {always_(add(
                {mul({Rl(1, 2), binomg(ta, half(ta)),
                      binominv(add({n, v, L(1)}), half(v))}),
                 neg(mul({binomg(tb, half(tb)),
                          binominv(add({n, v}), half(v))}))}))},
            {}, "odd-index v-extension",
            "odd-index sum with C((2k+v)/2,k)^(-1) weights",
            {"generalization"});
    }

    b.entry("amk3put", {N},
            S(L(1), ceil2(n),
              mul({binom(n, k2m1), inv(add({k2, L(1)}))})),
            {always_(add({mul({p2(add(n, L(1))), inv(add(n, L(2)))}),
                          neg(mul({p2(n), inv(add(n, L(1)))}))}))},
            {}, "odd-index harmonic-weight sum",
            "sum C(n,2k-1)/(2k+1) in closed form", {"harmonic"});

    b.entry("ct31is7", {N},
            S(L(1), ceil2(n),
              mul({binom(n, k2m1), p2(add({n, mul({L(-2), k})})), cat(k)})),
            {always_(add({mul({Rl(1, 2), cat(add(n, L(2)))}),
                          neg(cat(add(n, L(1))))}))},
            {}, "odd-index Catalan-weight sum",
            "sum C(n,2k-1) 2^(n-2k) Cat(k) in closed Catalan form",
            {"catalan"});

    b.entry("ratio-gen", {N, M},
            S(L(0), n,
              mul({altsign(k), binom(n, k), p2(add({k, m})),
                   inv(add({k, m, L(1)}))})),
            {even_("n", S(L(0), floor2(m),
                          mul({binom(m, k2), inv(add({k2, n, L(1)}))}))),
             odd_("n", neg(S(L(1), ceil2(m),
                             mul({binom(m, k2m1), inv(add({k2, n}))}))))},
            {}, "two-parameter harmonic-weight sum",
            "alternating sum of 2^(k+m)/(k+m+1) with parity-split right side",
            {"harmonic"});

    b.entry("ratio-v1", {N},
            S(L(0), n,
              mul({altsign(k), binom(n, k), p2(k), inv(add(k, L(1)))})),
            {even_("n", inv(add(n, L(1)))), odd_("n", L(0))},
            {}, "harmonic-weight particular, first",
            "sum (-1)^k C(n,k) 2^k/(k+1) splits by parity", {"harmonic"});

    b.entry("ratio-v2", {N},
            S(L(0), n,
              mul({altsign(k), binom(n, k), p2(add(k, L(1))),
                   inv(add(k, L(2)))})),
            {even_("n", inv(add(n, L(1)))),
             odd_("n", neg(inv(add(n, L(2)))))},
            {}, "harmonic-weight particular, second",
            "sum (-1)^k C(n,k) 2^(k+1)/(k+2) splits by parity", {"harmonic"});

    // --- convolution-type identities with a v parameter -----------------

    {
        ExprPtr t2 = add({n2, mul({L(-2), k}), v});
        b.entry("complement1-v", {N, V},
                S(L(0), n,
                  mul({altsign(k), binom(n, k), binomg(tkv, half(tkv)),
                       binomg(t2, half(t2)), binominv(add({n, v}), half(tkv))})),
                {even_("n", mul({p2(n), binom(n, floor2(n)),
                                 binomg(v, half(v)),
                                 binominv(half(add({n, v})), half(v))})),
                 odd_("n", L(0))},
                {}, "v-extension of the alternating convolution",
                "alternating product of two generalized central binomials",
                {"convolution", "generalization"});

        b.entry("complement2-v", {N, V},
                S(L(0), n,
                  mul({binom(n, k), binomg(tkv, half(tkv)),
                       binomg(t2, half(t2)), binominv(add({n, v}), half(tkv))})),
                {always_(mul({p2(n2), binomg(v, half(v))}))},
                {}, "v-extension of the convolution",
                "product of two generalized central binomials summing to 4^n C(v,v/2)",
                {"convolution", "generalization"});
    }

    // --- polynomial identities in a free variable x ---------------------

    b.entry(
        "sf62i7f", {N, U, V, X},
        S(L(0), n,
          mul({altsign(sub(n, k)), binom(n, k),
               binominv(add({k, u, v, L(1)}), add(u, L(1))),
               pw(sub(L(1), x), sub(n, k))})),
        {always_(mul({add(u, L(1)), inv(add(v, L(1))),
                      S(L(0), n,
                        mul({altsign(k), binom(n, k),
                             binominv(add({k, u, v, L(1)}), add(v, L(1))),
                             pw(x, sub(n, k))}))}))},
        {}, "inverse-binomial polynomial identity",
        "C(k+u+v+1,u+1)^(-1) weights against powers of (1-x) and x",
        {"polynomial"});

    b.entry("sf62i7f-part", {N, X},
            S(L(0), n,
              mul({altsign(sub(n, k)), binom(n, k), inv(add(k, L(1))),
                   pw(sub(L(1), x), sub(n, k))})),
            {always_(S(L(0), n,
                       mul({altsign(k), binom(n, k), inv(add(k, L(1))),
                            pw(x, sub(n, k))})))},
            {}, "inverse-binomial polynomial identity at u=v=0",
            "1/(k+1) weights against powers of (1-x) and x", {"polynomial"});

    b.entry(
        "qd43spp", {N, V, X},
        S(L(0), n,
          mul({altsign(sub(n, k)), binom(n, k), p2(neg(k)),
               binomg(tkv, half(tkv)), binominv(add({k, v}), half(v)),
               pw(sub(L(1), x), sub(n, k))})),
        {always_(S(L(0), floor2(n),
                   mul({binom(n, k2), p2(mul({L(-2), k})), cb(k),
                        binominv(half(tkv), k), pw(x, sub(n, k2))})))},
        {}, "v-extended polynomial identity",
        "generalized central binomials against powers of (1-x) and x",
        {"polynomial", "generalization"});

    b.entry("l5xib79", {N, X},
            S(L(0), n,
              mul({altsign(sub(n, k)), binom(n, k), p2(neg(k)), cb(k),
                   pw(sub(L(1), x), sub(n, k))})),
            {always_(S(L(0), floor2(n),
                       mul({binom(n, k2), p2(mul({L(-2), k})), cb(k),
                            pw(x, sub(n, k2))})))},
            {}, "central-binomial polynomial identity (v=0)",
            "C(2k,k) weights against powers of (1-x) and x", {"polynomial"});

    b.entry("hmx1w7h", {N, X},
            S(L(0), n,
              mul({altsign(sub(n, k)), binom(n, k), p2(k), inv(add(k, L(1))),
                   pw(sub(L(1), x), sub(n, k))})),
            {always_(S(L(0), floor2(n),
                       mul({binom(n, k2), inv(add({k2, L(1)})),
                            pw(x, sub(n, k2))})))},
            {}, "harmonic polynomial identity (v=1)",
            "2^k/(k+1) weights against powers of (1-x) and x", {"polynomial"});

    b.entry(
        "bv1inky", {N, X},
        S(L(0), n,
          mul({altsign(sub(n, k)), binom(n, k), inv(add(k, L(2))), p2(neg(k)),
               binom(mul({L(2), add(k, L(1))}), add(k, L(1))),
               pw(sub(L(1), x), sub(n, k))})),
        {always_(S(L(0), floor2(n),
                   mul({binom(n, k2), inv(add(k, L(1))), p2(mul({L(-2), k})),
                        cb(k), pw(x, sub(n, k2))})))},
        {}, "Catalan-flavoured polynomial identity (v=2)",
        "C(2(k+1),k+1)/(k+2) weights against powers of (1-x) and x",
        {"polynomial", "catalan"});

    b.entry(
        "tnrm6l2", {N, U, V, X},
        mul({binomg(v, half(v)),
             S(L(0), n,
               mul({altsign(sub(n, k)), binom(n, k), p2(mul({L(-2), k})),
                    binomg(tku, half(tku)), binominv(half(tkuv), half(v)),
                    pw(sub(L(1), x), sub(n, k))}))}),
        {always_(mul(
            {binomg(u, half(u)),
             S(L(0), n,
               mul({altsign(k), binom(n, k), p2(mul({L(-2), k})),
                    binomg(tkv, half(tkv)), binominv(half(tkuv), half(u)),
                    pw(x, sub(n, k))}))}))},
        {}, "symmetric (u,v) polynomial identity",
        "u and v exchange under x -> 1-x on the two sides",
        {"polynomial", "generalization"});

    b.entry("tnrm6l2-c0", {N, X},
            S(L(0), n,
              mul({altsign(sub(n, k)), cb(k), p2(mul({L(-2), k})),
                   binom(n, k), pw(sub(L(1), x), sub(n, k))})),
            {always_(S(L(0), n,
                       mul({altsign(k), cb(k), p2(mul({L(-2), k})),
                            binom(n, k), pw(x, sub(n, k))})))},
            {}, "symmetric polynomial identity at u=v=0",
            "C(2k,k) 4^(-k) weights, symmetric in x -> 1-x", {"polynomial"});

    b.entry("tnrm6l2-c2", {N, X},
            S(L(0), n,
              mul({altsign(sub(n, k)), p2(mul({L(-2), k})), binom(n, k),
                   cat(add(k, L(1))), pw(sub(L(1), x), sub(n, k))})),
            {always_(S(L(0), n,
                       mul({altsign(k), p2(mul({L(-2), k})), binom(n, k),
                            cat(add(k, L(1))), pw(x, sub(n, k))})))},
            {}, "symmetric polynomial identity at u=v=2",
            "Cat(k+1) 4^(-k) weights, symmetric in x -> 1-x",
            {"polynomial", "catalan"});

    b.entry(
        "p9vcynz", {N, V, X},
        S(L(0), n,
          mul({binom(n, k), p2(neg(k)), binomg(tkv, half(tkv)),
               binominv(add({k, v}), half(v)), pw(sub(L(1), x), k),
               pw(x, sub(n, k))})),
        {always_(S(L(0), floor2(n),
                   mul({binom(n, k2), p2(mul({L(-2), k})), cb(k),
                        binominv(half(tkv), k), pw(sub(L(1), x), k2)})))},
        {}, "second v-extended polynomial identity",
        "powers of x and (1-x) mixed on the left, (1-x)^(2k) on the right",
        {"polynomial", "generalization"});

    b.entry("yvskdge", {N, X},
            S(L(0), n,
              mul({binom(n, k), p2(neg(k)), cb(k), pw(sub(L(1), x), k),
                   pw(x, sub(n, k))})),
            {always_(S(L(0), floor2(n),
                       mul({binom(n, k2), p2(mul({L(-2), k})), cb(k),
                            pw(sub(L(1), x), k2)})))},
            {}, "second polynomial identity at v=0",
            "C(2k,k) 2^(-k) weights with (1-x)^k x^(n-k)", {"polynomial"});

    b.entry("ni2yglt", {N, X},
            S(L(0), n,
              mul({binom(n, k), p2(k), inv(add(k, L(1))), pw(sub(L(1), x), k),
                   pw(x, sub(n, k))})),
            {always_(S(L(0), floor2(n),
                       mul({binom(n, k2), inv(add({k2, L(1)})),
                            pw(sub(L(1), x), k2)})))},
            {}, "second polynomial identity at v=1",
            "2^k/(k+1) weights with (1-x)^k x^(n-k)", {"polynomial"});

    b.entry("fe8atkt", {N, X},
            S(L(0), n,
              mul({binom(n, k), p2(neg(k)), cat(add(k, L(1))),
                   pw(sub(L(1), x), k), pw(x, sub(n, k))})),
            {always_(S(L(0), floor2(n),
                       mul({binom(n, k2), p2(mul({L(-2), k})), cat(k),
                            pw(sub(L(1), x), k2)})))},
            {}, "second polynomial identity at v=2",
            "Cat(k+1) 2^(-k) weights with (1-x)^k x^(n-k)",
            {"polynomial", "catalan"});

    // --- combinatorial identities from the polynomial ones --------------

    b.entry("binom-inv-sum", {N, U, V},
            S(L(0), n,
              mul({altsign(k), binom(n, k),
                   binominv(add({k, u, v, L(1)}), add(u, L(1)))})),
            {always_(mul({add(u, L(1)), inv(add(v, L(1))),
                          binominv(add({n, u, v, L(1)}), add(v, L(1)))}))},
            {}, "alternating inverse-binomial sum in closed form",
            "sum (-1)^k C(n,k) C(k+u+v+1,u+1)^(-1) closed in n",
            {"generalization"});

    b.entry("ilndvr6", {N, V},
            S(L(0), n,
              mul({altsign(k), binom(n, k), p2(add({n, mul({L(-2), k})})),
                   binomg(tkv, half(tkv)), binominv(add({k, v}), half(v))})),
            {always_(S(L(0), floor2(n),
                       mul({binom(n, k2), p2(mul({L(-2), k})), cb(k),
                            binominv(half(tkv), k)})))},
            {}, "v-extended identity at x=-1",
            "2^(n-2k) weights equal the even-index 4^(-k) sum",
            {"generalization"});

    b.entry("alpigwp", {N, V},
            S(L(0), n,
              mul({binom(n, k), p2(neg(k)), binomg(tkv, half(tkv)),
                   binominv(add({k, v}), half(v))})),
            {always_(S(L(0), floor2(n),
                       mul({binom(n, k2), p2(add({n, mul({L(-4), k})})),
                            cb(k), binominv(half(tkv), k)})))},
            {}, "v-extended identity at x=2",
            "2^(-k) weights equal the even-index 2^(n-4k) sum",
            {"generalization"});

    b.entry("nkjtw6g-1", {N},
            S(L(0), n,
              mul({altsign(k), binom(n, k), p2(add({n, mul({L(-2), k})})),
                   cb(k)})),
            {always_(S(L(0), floor2(n),
                       mul({binom(n, k2), p2(mul({L(-2), k})), cb(k)})))},
            {}, "central-binomial identity at x=-1",
            "alternating 2^(n-2k) C(2k,k) sum equals the even-index sum",
            {"central-binomial"});

    b.entry("nkjtw6g-2", {N},
            S(L(0), floor2(n), mul({binom(n, k2), inv(add({k2, L(1)}))})),
            {always_(mul({p2(sub(n, L(1))), inv(sub(p2(n), L(1))),
                          S(L(1), ceil2(n),
                            mul({binom(n, k2m1), inv(k)}))}))},
            {{ge1("n")}}, "harmonic identity at x=-1 (n nonzero)",
            "even-index harmonic sum proportional to the odd-index one",
            {"harmonic"});

    b.entry("nkjtw6g-3", {N},
            S(L(0), n,
              mul({altsign(k), binom(n, k), add({k2, L(1)}),
                   inv(add(k, L(2))), p2(add({n, mul({L(-2), k}), L(1)})),
                   cat(k)})),
            {always_(S(L(0), floor2(n),
                       mul({binom(n, k2), p2(mul({L(-2), k})), cat(k)})))},
            {}, "Catalan identity at x=-1",
            "alternating (2k+1)/(k+2) Catalan sum equals the even-index sum",
            {"catalan"});

    b.entry("n12zl7g-x1-1", {N},
            S(L(0), floor2(n),
              mul({binom(n, k2), p2(mul({L(-2), k})), cb(k)})),
            {always_(mul({p2(neg(n)), cb(n)}))},
            {}, "even-index central-binomial sum at x=1",
            "sum C(n,2k) 4^(-k) C(2k,k) equals 2^(-n) C(2n,n)",
            {"central-binomial"});

    b.entry("n12zl7g-x1-2", {N},
            S(L(0), floor2(n), mul({binom(n, k2), inv(add({k2, L(1)}))})),
            {always_(mul({p2(n), inv(add(n, L(1)))}))},
            {}, "even-index harmonic sum at x=1",
            "sum C(n,2k)/(2k+1) equals 2^n/(n+1)", {"harmonic"});

    b.entry("n12zl7g-x1-3", {N},
            S(L(0), floor2(n),
              mul({binom(n, k2), inv(add(k, L(1))), p2(mul({L(-2), k})),
                   cb(k)})),
            {always_(mul({p2(add({neg(n), L(1)})), inv(add(n, L(2))),
                          add({n2, L(1)}), cat(n)}))},
            {}, "even-index Catalan sum at x=1",
            "sum C(n,2k) 4^(-k) C(2k,k)/(k+1) in closed Catalan form",
            {"catalan"});

    b.entry("n12zl7g-1", {N},
            S(L(0), n, mul({binom(n, k), p2(neg(k)), cb(k)})),
            {always_(S(L(0), floor2(n),
                       mul({binom(n, k2), p2(add({n, mul({L(-4), k})})),
                            cb(k)})))},
            {}, "central-binomial identity at x=2",
            "sum C(n,k) 2^(-k) C(2k,k) equals the even-index 2^(n-4k) sum",
            {"central-binomial"});

    b.entry("n12zl7g-2", {N},
            S(L(0), floor2(n),
              mul({binom(n, k2),
                   sub(p2(add({n, mul({L(-2), k}), L(1)})),
                       p2(add({k2, L(1)}))),
                   inv(add({k2, L(1)}))})),
            {always_(S(L(1), ceil2(n),
                       mul({binom(n, k2m1), p2(sub(k2, L(1))), inv(k)})))},
            {}, "harmonic identity at x=2",
            "even-index weighted harmonic sum equals the odd-index one",
            {"harmonic"});

    b.entry("n12zl7g-3", {N},
            S(L(0), n,
              mul({binom(n, k), add({k2, L(1)}), inv(add(k, L(2))),
                   p2(add({neg(k), L(1)})), cat(k)})),
            {always_(S(L(0), floor2(n),
                       mul({binom(n, k2), p2(add({n, mul({L(-4), k})})),
                            cat(k)})))},
            {}, "Catalan identity at x=2",
            "(2k+1)/(k+2) Catalan sum equals the even-index 2^(n-4k) sum",
            {"catalan"});

    b.entry("yveoyay", {N, V},
            S(L(0), n,
              mul({altsign(sub(n, k)), binom(n, k), binomg(tkv, half(tkv)),
                   binominv(add({k, v}), half(v))})),
            {always_(S(L(0), floor2(n),
                       mul({binom(n, k2), cb(k), binominv(half(tkv), k)})))},
            {}, "second v-extended identity at x=-1",
            "alternating generalized central binomials without powers of 2",
            {"generalization"});

    b.entry("vq5bsch-1", {N},
            S(L(0), n, mul({altsign(sub(n, k)), binom(n, k), cb(k)})),
            {always_(S(L(0), floor2(n),
                       mul({binom(n, k), binom(sub(n, k), k)})))},
            {}, "central-binomial particular at v=0",
            "alternating C(n,k) C(2k,k) equals sum of C(n,k) C(n-k,k)",
            {"central-binomial"});

    b.entry("vq5bsch-2", {N},
            S(L(0), n,
              mul({altsign(sub(n, k)), binom(n, k), p2(k2),
                   inv(add(k, L(1)))})),
            {always_(S(L(0), floor2(n),
                       mul({binom(n, k2), p2(k2), inv(add({k2, L(1)}))})))},
            {}, "harmonic particular at v=1",
            "alternating 4^k/(k+1) sum equals the even-index 4^k/(2k+1) sum",
            {"harmonic"});

    b.entry("vq5bsch-3", {N},
            S(L(0), n,
              mul({altsign(sub(n, k)), binom(n, k), L(2), add({k2, L(1)}),
                   inv(add(k, L(2))), cat(k)})),
            {always_(S(L(0), floor2(n), mul({binom(n, k2), cat(k)})))},
            {}, "Catalan particular at v=2",
            "alternating 2(2k+1)/(k+2) Catalan sum equals the even-index sum",
            {"catalan"});

    // --- identities from the squared half-angle expansion ---------------

    b.entry(
        "ei75ly5", {N, V},
        S(L(0), n,
          mul({binom(n2, k2), cb(sub(n, k)), binomg(tkv, half(tkv)),
               binominv(half(add({n2, v})), sub(n, k))})),
        {always_(S(L(0), floor2(n),
                   mul({binom(n, k2), p2(add({n2, mul({L(-2), k})})), cb(k),
                        binomg(tkv, half(tkv)),
                        binominv(half(add({mul({L(4), k}), v})), k)})))},
        {}, "even-index half-angle expansion identity",
        "C(2n,2k) convolution equals the even-index 2^(2n-2k) sum",
        {"half-angle", "generalization"});

    b.entry(
        "ei75ly5-part", {N},
        S(L(0), n,
          mul({binom(n2, k2), cb(sub(n, k)), cb(k), binominv(n, k)})),
        {always_(S(L(0), floor2(n),
                   mul({binom(n, k2), p2(add({n2, mul({L(-2), k})})),
                        cb(k)})))},
        {}, "even-index half-angle identity at v=0",
        "C(2n,2k) C(2(n-k),n-k) C(2k,k) C(n,k)^(-1) convolution",
        {"half-angle"});

    {
        ExprPtr t = add({k2, L(-1), v});
        ExprPtr nk1 = add({n, neg(k), L(1)});
        b.entry(
            "lwx1yzw", {N, V},
            S(L(1), n,
              mul({binom(n2, k2m1), cb(nk1), binomg(t, half(t)),
                   binominv(half(add({n2, v, L(1)})), nk1)})),
            {always_(S(L(1), ceil2(n),
                       mul({binom(n, k2m1),
                            p2(add({n2, L(1), mul({L(-2), k})})), cb(k),
                            binomg(t, half(t)),
                            binominv(half(add({mul({L(4), k}), v, L(-1)})),
                                     k)})))},
            {}, "odd-index half-angle expansion identity",
            "C(2n,2k-1) convolution equals the odd-index 2^(2n+1-2k) sum",
            {"half-angle", "generalization"});

        ExprPtr t0 = sub(k2, L(1));
        b.entry(
            "lwx1yzw-part", {N},
            S(L(1), n,
              mul({binom(n2, k2m1), cb(nk1), binomg(t0, half(t0)),
                   binominv(half(add({n2, L(1)})), nk1)})),
            {always_(S(L(1), ceil2(n),
                       mul({binom(n, k2m1),
                            p2(add({n2, L(1), mul({L(-2), k})})), cb(k),
                            binomg(t0, half(t0)),
                            binominv(half(sub(mul({L(4), k}), L(1))), k)})))},
            {}, "odd-index half-angle identity at v=0",
            "half-integer central binomials C(2k-1,(2k-1)/2) on both sides",
            {"half-angle"});
    }

    // --- identities from the symmetric power-sum expansions -------------

    b.entry("h35j76y", {N, X, Y},
            S(L(0), floor2(n),
              mul({altsign(k), n, inv(sub(n, k)), binom(sub(n, k), k),
                   pw(mul({x, y}), k),
                   pw(add(x, y), add({n, mul({L(-2), k})}))})),
            {always_(add({pw(x, n), pw(y, n)}))},
            {{ge1("n")}}, "power-sum expansion in xy and x+y",
            "x^n + y^n expanded over (xy)^k (x+y)^(n-2k)", {"waring"});

    b.entry("amsa61r", {N, X, Y},
            S(L(0), floor2(n),
              mul({altsign(k), binom(sub(n, k), k), pw(mul({x, y}), k),
                   pw(add(x, y), add({n, mul({L(-2), k})}))})),
            {always_(mul({sub(pw(x, add(n, L(1))), pw(y, add(n, L(1)))),
                          inv(sub(x, y))}))},
            {{ne_params("x", "y")}}, "geometric power-sum expansion",
            "(x^(n+1)-y^(n+1))/(x-y) expanded over (xy)^k (x+y)^(n-2k)",
            {"waring"});

    {
        ExprPtr t2n = add({n2, v});
        b.entry("rvlh5im", {N, V},
                S(L(0), floor2(n),
                  mul({altsign(k), n, inv(sub(n, k)), binom(sub(n, k), k),
                       p2(mul({L(-4), k})), binomg(tkv, half(tkv))})),
                {always_(mul({binomg(t2n, half(t2n)), binomg(v, half(v)),
                              p2(add({L(1), mul({L(-2), n})})),
                              binominv(add({n, v}), half(v))}))},
                {{ge1("n")}}, "trigonometric image of the power-sum expansion",
                "16^(-k) generalized central binomials summing in closed form",
                {"waring", "generalization"});
    }

    b.entry("rvlh5im-part", {N},
            S(L(0), floor2(n),
              mul({altsign(k), n, inv(sub(n, k)), binom(sub(n, k), k),
                   p2(mul({L(-4), k})), cb(k)})),
            {always_(mul({p2(add({mul({L(-2), n}), L(1)})), cb(n)}))},
            {{ge1("n")}}, "power-sum image at v=0",
            "sum 16^(-k) (n/(n-k)) C(n-k,k) C(2k,k) equals 2^(1-2n) C(2n,n)",
            {"waring"});

    // --- identities from the symmetric binomial-product expansion -------

    b.entry("oli5mgr", {N, X},
            S(L(0), n,
              mul({altsign(sub(n, k)), binom(n, k), binom(add(n, k), k),
                   pw(add(L(1), x), k)})),
            {always_(S(L(0), n,
                       mul({binom(n, k), binom(add(n, k), k), pw(x, k)})))},
            {}, "symmetric binomial-product polynomial identity",
            "C(n,k) C(n+k,k) weights, symmetric under 1+x -> x",
            {"simons", "polynomial"});

    b.entry(
        "s9xhgba", {N, V},
        S(L(0), n,
          mul({altsign(sub(n, k)), binom(n, k), p2(neg(k)),
               binom(add(n, k), k), binomg(tkv, half(tkv)),
               binominv(add({k, v}), half(v))})),
        {always_(S(L(0), floor2(n),
                   mul({binom(n, k2), p2(mul({L(-2), k})),
                        binom(add(n, k2), k2), cb(k),
                        binominv(half(tkv), half(v))})))},
        {}, "v-extension of the binomial-product identity",
        "C(n,k) C(n+k,k) with generalized central binomials in v",
        {"simons", "generalization"});

    b.entry(
        "s9xhgba-part", {N},
        S(L(0), n,
          mul({altsign(sub(n, k)), binom(n, k), p2(neg(k)),
               binom(add(n, k), k), cb(k)})),
        {always_(S(L(0), floor2(n),
                   mul({binom(n, k2), p2(mul({L(-2), k})),
                        binom(add(n, k2), k2), cb(k)})))},
        {}, "binomial-product identity at v=0",
        "alternating C(n,k) C(n+k,k) 2^(-k) C(2k,k) equals the even-index sum",
        {"simons"});

    b.entry(
        "simons-uv", {N, U, V},
        S(L(0), n,
          mul({altsign(sub(n, k)), binom(n, k), p2(mul({L(-2), k})),
               binom(add(n, k), k), binomg(v, half(v)), binomg(tku, half(tku)),
               binominv(half(tkuv), half(v))})),
        {always_(S(L(0), n,
                   mul({altsign(k), binom(n, k), p2(mul({L(-2), k})),
                        binom(add(n, k), k), binomg(u, half(u)),
                        binomg(tkv, half(tkv)),
                        binominv(half(tkuv), half(u))})))},
        {}, "symmetric (u,v) binomial-product identity",
        "u and v exchange across the two alternating sums",
        {"simons", "generalization"});

    return b.out;
}

}  // namespace

const std::vector<Rational>& default_n_range() {
    static const std::vector<Rational> r = [] {
        std::vector<Rational> v;
        for (long i = 0; i <= 15; ++i) v.push_back(Rational(i));
        return v;
    }();
    return r;
}

const std::vector<Rational>& default_n_range_single() {
    static const std::vector<Rational> r = [] {
        std::vector<Rational> v;
        for (long i = 0; i <= 25; ++i) v.push_back(Rational(i));
        return v;
    }();
    return r;
}

const std::vector<Rational>& default_v_grid() {
    static const std::vector<Rational> r = [] {
        std::vector<Rational> v;
        for (long t = 0; t <= 8; ++t) v.push_back(make_rational(t, 2));
        return v;
    }();
    return r;
}

const std::vector<Rational>& default_xy_samples() {
    static const std::vector<Rational> r = {
        Rational(-2),        Rational(-1), make_rational(-1, 2), Rational(0),
        make_rational(1, 2), Rational(1),  Rational(2),          Rational(3)};
    return r;
}

const std::vector<Rational>& default_numeric_v() {
    static const std::vector<Rational> r = {
        make_rational(3, 10), make_rational(3, 4), make_rational(11, 5)};
    return r;
}

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry& lookup(const std::string& id) {
    for (const auto& e : catalog_entries())
        if (e.identity.id == id) return e;
    throw UnknownId(id);
}

}  // namespace binomid
