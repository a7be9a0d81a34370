// End-to-end acceptance checks; one pass/fail line per criterion.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "binomid/catalog.hpp"
#include "binomid/dsl.hpp"
#include "binomid/oracle.hpp"
#include "binomid/quadrature.hpp"
#include "binomid/transform.hpp"

using namespace binomid;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int number, const std::string& label, bool pass,
            const std::string& detail = "") {
    std::cout << "AC" << number << " " << label << ": "
              << (pass ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!pass) ++failures;
}

ParamBinding bind_n(long n) { return {{"n", Rational(n)}}; }

// ---------------------------------------------------------------- criteria

void ac1_flagship() {
    auto t0 = Clock::now();
    const Identity& kn = lookup("knuth").identity;
    bool ok = true;
    for (long n = 0; n <= 40 && ok; ++n)
        ok = verify_instance(kn, bind_n(n), {}).status == Status::ExactEqual;
    for (long n = 1; n <= 99 && ok; n += 2) {
        PiValue lhs = eval_exact(kn.lhs, bind_n(n));
        ok = lhs.is_zero() && lhs.terms().empty();
    }
    double dt = seconds_since(t0);
    std::ostringstream d;
    d << dt << "s";
    report(1, "alternating central-binomial sum", ok && dt < 1.0, d.str());
}

void ac2_two_parameter() {
    auto t0 = Clock::now();
    const Identity& gen = lookup("knuth-gen").identity;
    const Identity& kn = lookup("knuth").identity;
    bool ok = true;
    for (long n = 0; n <= 20 && ok; ++n) {
        for (long m = 0; m <= 20 && ok; ++m) {
            ParamBinding b{{"n", Rational(n)}, {"m", Rational(m)}};
            ok = verify_instance(gen, b, {}).status == Status::ExactEqual;
        }
        if (ok) {
            ParamBinding b0{{"n", Rational(n)}, {"m", Rational(0)}};
            ok = eval_exact(gen.lhs, b0) == eval_exact(kn.lhs, bind_n(n));
        }
    }
    double dt = seconds_since(t0);
    std::ostringstream d;
    d << dt << "s";
    report(2, "two-parameter generalization", ok && dt < 10.0, d.str());
}

void ac3_convolutions() {
    const Identity& c2 = lookup("complement2").identity;
    const Identity& c1 = lookup("complement1").identity;
    bool ok = true;
    Rational power(1);
    for (long n = 0; n <= 30 && ok; ++n) {
        PiValue lhs = eval_exact(c2.lhs, bind_n(n));
        ok = lhs.is_rational() && lhs.as_rational() == power;
        power *= 4;
    }
    for (long n = 0; n <= 30 && ok; ++n)
        ok = verify_instance(c1, bind_n(n), {}).status == Status::ExactEqual;
    report(3, "central-binomial convolutions", ok);
}

void ac4_full_sweep() {
    auto t0 = Clock::now();
    bool ok = true;
    std::size_t total = 0, skipped = 0;
    std::string detail;
    for (const auto& e : catalog_entries()) {
        auto results = sweep(e.identity, e.default_ranges, {}, 4);
        total += results.size();
        for (const auto& r : results) {
            if (r.status == Status::Mismatch) {
                ok = false;
                detail = e.identity.id + " [" + binding_str(r.binding) + "]";
            } else if (r.status == Status::Skipped) {
                ++skipped;
                if (r.note != "outside validity domain") {
                    ok = false;
                    detail = "unexpected skip: " + e.identity.id + " [" +
                             binding_str(r.binding) + "] " + r.note;
                }
            }
        }
    }
    double dt = seconds_since(t0);
    std::ostringstream d;
    d << total << " instances, " << skipped << " skipped, " << dt << "s";
    if (!detail.empty()) d << ", " << detail;
    report(4, "full catalog sweep", ok && dt < 60.0, d.str());
}

void ac5_reductions() {
    bool ok = true;
    const Identity& gen = lookup("knuth-gen").identity;
    const Identity& kn = lookup("knuth").identity;
    const Identity& hv = lookup("hdj69wz").identity;
    const Identity& qd = lookup("qd43spp").identity;
    const Identity& y6 = lookup("y6pnymc").identity;
    for (long n = 0; n <= 12 && ok; ++n) {
        ParamBinding bk = bind_n(n);
        ok = eval_exact(gen.lhs, {{"n", Rational(n)}, {"m", Rational(0)}}) ==
             eval_exact(kn.lhs, bk);
        if (!ok) break;
        ok = eval_exact(hv.lhs, {{"n", Rational(n)}, {"v", Rational(0)}}) ==
             eval_exact(kn.lhs, bk);
        for (Rational v : {Rational(0), make_rational(1, 2), Rational(2)}) {
            if (!ok) break;
            ParamBinding bh{{"n", Rational(n)}, {"v", v}};
            ok = eval_exact_value(
                     qd.lhs, {{"n", Rational(n)}, {"v", v}, {"x", Rational(0)}}) ==
                     eval_exact_value(hv.lhs, bh) &&
                 eval_exact_value(
                     qd.lhs, {{"n", Rational(n)}, {"v", v}, {"x", Rational(1)}}) ==
                     eval_exact_value(y6.lhs, bh);
        }
    }
    const Identity& ef = lookup("ef9et5k").identity;
    const Identity& ef2 = lookup("ef9et5k-alt").identity;
    for (long n = 0; n <= 30 && ok; ++n) {
        ParamBinding b = bind_n(n);
        const CasedRhs* a = select_case(ef, b);
        const CasedRhs* c = select_case(ef2, b);
        ok = a && c && eval_exact(a->expr, b) == eval_exact(c->expr, b);
    }
    report(5, "cross-entry reductions", ok);
}

void ac6_quadrature() {
    auto t0 = Clock::now();
    const int digits = 30;
    mpfr_prec_t prec = BigFloat::bits_for_digits(digits);
    BigFloat tol = BigFloat::pow10(-(digits - 4), prec);
    bool ok = true;
    std::string detail;
    long checked = 0;
    std::vector<Rational> grid;
    for (long t = -1; t <= 10; ++t) grid.push_back(make_rational(t, 2));
    struct Family {
        const char* name;
        IntegralKind kind;
        int u_class;  // 0: any, 1: integer only, 2: non-integer only
    } families[] = {
        {"K", IntegralKind::K_quarter, 0},
        {"I", IntegralKind::I_half_angle, 0},
        {"J", IntegralKind::J_full, 1},
        {"J-general", IntegralKind::J_full, 2},
        {"beta01", IntegralKind::Beta01, 0},
    };
    for (const auto& fam : families) {
        for (const auto& u : grid) {
            if (fam.u_class == 1 && !is_integer(u)) continue;
            if (fam.u_class == 2 && is_integer(u)) continue;
            for (const auto& v : grid) {
                if (u <= -1 || v <= -1) continue;
                QuadratureSpec spec{fam.kind, u, v, digits};
                QuadResult got = integrate(spec);
                QuadResult want = closed_form_numeric(spec);
                BigFloat scale = got.re.abs() + got.im.abs() + want.re.abs() +
                                 want.im.abs() +
                                 BigFloat::from_long(1, prec);
                BigFloat err = ((got.re - want.re).abs() +
                                (got.im - want.im).abs()) /
                               scale;
                ++checked;
                if (!(err <= tol)) {
                    ok = false;
                    detail = std::string(fam.name) + " u=" + rational_str(u) +
                             " v=" + rational_str(v) + " err=" + err.str(3);
                }
            }
        }
    }
    double dt = seconds_since(t0);
    std::ostringstream d;
    d << checked << " points, " << dt << "s";
    if (!detail.empty()) d << ", " << detail;
    report(6, "quadrature vs closed forms", ok && dt < 120.0, d.str());
}

void ac7_numeric_off_grid() {
    bool ok = true;
    std::string detail;
    const std::vector<Rational> vs = {make_rational(3, 10),
                                      make_rational(3, 4),
                                      make_rational(11, 5)};
    const std::vector<Rational> xs = {Rational(0), make_rational(1, 2),
                                      Rational(2)};
    for (const char* id : {"hdj69wz", "y6pnymc", "wf0mlz9", "qd43spp",
                           "p9vcynz", "rvlh5im", "s9xhgba"}) {
        const Identity& ident = lookup(id).identity;
        bool has_x = ident.find_param("x") != nullptr;
        for (long n = 0; n <= 8 && ok; ++n) {
            for (const auto& v : vs) {
                if (!ok) break;
                for (const auto& x : has_x ? xs
                                           : std::vector<Rational>{Rational(0)}) {
                    ParamBinding b{{"n", Rational(n)}, {"v", v}};
                    if (has_x) b["x"] = x;
                    if (!predicate_holds(ident.validity, b)) continue;
                    VerificationResult r =
                        verify_instance(ident, b, {true, 30});
                    if (r.status != Status::NumericEqual ||
                        r.relerr > 1e-20) {
                        ok = false;
                        detail = std::string(id) + " [" + binding_str(b) +
                                 "] " + status_name(r.status);
                        break;
                    }
                }
            }
        }
    }
    report(7, "numeric off-grid evidence", ok, detail);
}

SweepRanges joint_ranges(const Identity& a, const Identity& b, long n_max) {
    SweepRanges r;
    auto add_params = [&](const Identity& ident) {
        for (const auto& p : ident.params) {
            if (r.count(p.name)) continue;
            switch (p.kind) {
                case ParamKind::Natural: {
                    std::vector<Rational> ns;
                    for (long n = 0; n <= n_max; ++n) ns.push_back(Rational(n));
                    r[p.name] = ns;
                    break;
                }
                case ParamKind::GridReal:
                    r[p.name] = {Rational(0), make_rational(1, 2), Rational(1),
                                 Rational(2)};
                    break;
                case ParamKind::FreeRational:
                    r[p.name] = {Rational(0), Rational(1), Rational(-1),
                                 make_rational(1, 2)};
                    break;
            }
        }
    };
    add_params(a);
    add_params(b);
    return r;
}

void ac8_transform_reproduction() {
    bool ok = true;
    std::string detail;
    auto check = [&](const Identity& derived, const char* id, long n_max) {
        if (!ok) return;
        const Identity& target = lookup(id).identity;
        if (!extensionally_equal(derived, target,
                                 joint_ranges(derived, target, n_max))) {
            ok = false;
            detail = derived.id + std::string(" vs ") + id;
        }
    };
    try {
        check(t_beta01(standard_form("binomial"), std::nullopt, std::nullopt),
              "sf62i7f", 7);
        check(t_power_form(standard_form("binomial"), std::nullopt).first,
              "qd43spp", 6);
        check(t_sin_sub(standard_form("binomial"), std::nullopt, std::nullopt),
              "tnrm6l2", 6);
        check(t_power_form(standard_form("binomial-x"), std::nullopt).first,
              "p9vcynz", 6);
        check(t_sym_sin(symmetric_form("waring"), std::nullopt), "rvlh5im", 8);
        check(t_cos_parity(standard_form("simons"), std::nullopt,
                           ParitySide::ForwardOnQ),
              "s9xhgba", 6);
    } catch (const Error& e) {
        ok = false;
        detail = e.what();
    }
    report(8, "transform reproduction of catalog entries", ok, detail);
}

void ac9_oracle_equivalence() {
    std::mt19937 rng(461801);
    std::uniform_int_distribution<long> pick_n(0, 12);
    const auto& entries = catalog_entries();
    std::uniform_int_distribution<std::size_t> pick_entry(0,
                                                          entries.size() - 1);
    long compared = 0, discrepancies = 0;
    while (compared < 1000) {
        const auto& e = entries[pick_entry(rng)];
        ParamBinding b;
        for (const auto& p : e.identity.params) {
            if (p.kind == ParamKind::Natural) {
                b[p.name] = Rational(pick_n(rng));
            } else {
                const auto& range = e.default_ranges.at(p.name);
                b[p.name] = range[rng() % range.size()];
            }
        }
        if (!predicate_holds(e.identity.validity, b)) continue;
        const CasedRhs* c = select_case(e.identity, b);
        const ExprPtr& expr =
            (rng() % 2 == 0 || !c) ? e.identity.lhs : c->expr;
        PiValue got, want;
        try {
            got = eval_exact(expr, b);
            want = eval_oracle(expr, b);
        } catch (const Error&) {
            continue;  // not on the pi grading for this sample
        }
        ++compared;
        if (!(got == want)) ++discrepancies;
    }
    std::ostringstream d;
    d << compared << " instances, " << discrepancies << " discrepancies";
    report(9, "independent evaluator equivalence", discrepancies == 0,
           d.str());
}

void ac10_spot_values() {
    struct Spot {
        const char* id;
        long n;
        Rational want;
    } spots[] = {
        {"knuth", 2, make_rational(1, 2)},  {"ilslov7", 2, Rational(6)},
        {"ef9et5k", 2, Rational(4)},        {"amk3put", 2, make_rational(2, 3)},
        {"ct31is7", 1, make_rational(1, 2)}, {"complement2", 2, Rational(16)},
    };
    bool ok = true;
    std::string detail;
    for (const auto& s : spots) {
        PiValue v = eval_exact(lookup(s.id).identity.lhs, bind_n(s.n));
        if (!(v.is_rational() && v.as_rational() == s.want)) {
            ok = false;
            detail = std::string(s.id) + " gave " + v.str();
        }
    }
    report(10, "frozen spot values", ok, detail);
}

void ac11_dsl_round_trip() {
    bool ok = true;
    std::string detail;
    for (const auto& e : catalog_entries()) {
        std::string text = format_identity(e.identity);
        try {
            Identity back = parse_identity(text);
            if (!identity_equal(e.identity, back)) {
                ok = false;
                detail = "round-trip changed " + e.identity.id;
            }
        } catch (const Error& ex) {
            ok = false;
            detail = e.identity.id + std::string(": ") + ex.what();
        }
    }
    const char* corpus[] = {
        "identty knuth(n: nat) : 1 == 1",
        "identity (n: nat) : 1 == 1",
        "identity t n: nat) : 1 == 1",
        "identity t(n nat) : 1 == 1",
        "identity t(n: int) : 1 == 1",
        "identity t(n: nat : 1 == 1",
        "identity t(n: nat) 1 == 1",
        "identity t(n: nat) : 1 = 1",
        "identity t(n: nat) : 1 ==",
        "identity t(n: nat) : == 1",
        "identity t(n: nat) : 1 + == 1",
        "identity t(n: nat) : C(n) == 1",
        "identity t(n: nat) : C(n, == 1",
        "identity t(n: nat) : floor(n) == 1",
        "identity t(n: nat) : floor(n/3) == 1",
        "identity t(n: nat) : sum(k 0..n) k == 1",
        "identity t(n: nat) : sum(k=0.n) k == 1",
        "identity t(n: nat) : sum(k=0..n == 1",
        "identity t(n: nat) : 1 == cases { even(n) => 1 odd(n) => 0 }",
        "identity t(n: nat) : 1 == cases { twice(n) => 1; odd(n) => 0 }",
    };
    int malformed = 0;
    for (const char* text : corpus) {
        std::string s(text);
        try {
            parse_identity(s);
            ok = false;
            detail = "accepted: " + s;
        } catch (const ParseError& e) {
            ++malformed;
            if (e.span.start > e.span.end || e.span.end > s.size()) {
                ok = false;
                detail = "span outside input for: " + s;
            }
        }
    }
    std::ostringstream d;
    d << catalog_entries().size() << " entries, " << malformed
      << " malformed cases";
    if (!detail.empty()) d << ", " << detail;
    report(11, "text format round-trip and error spans", ok && malformed >= 20,
           d.str());
}

}  // namespace

int main() {
    ac1_flagship();
    ac2_two_parameter();
    ac3_convolutions();
    ac4_full_sweep();
    ac5_reductions();
    ac6_quadrature();
    ac7_numeric_off_grid();
    ac8_transform_reproduction();
    ac9_oracle_equivalence();
    ac10_spot_values();
    ac11_dsl_round_trip();
    std::cout << (failures == 0 ? "ALL CRITERIA PASS"
                                : "CRITERIA FAILED: " + std::to_string(failures))
              << "\n";
    return failures == 0 ? 0 : 1;
}
