#include "doctest.h"

#include <random>

#include "binomid/catalog.hpp"
#include "binomid/eval.hpp"
#include "binomid/oracle.hpp"

using namespace binomid;
using namespace binomid::ast;

namespace {
ExprPtr L(long v) { return lit(v); }
}

TEST_CASE("scalar evaluation of bounds and exponents") {
    ParamBinding b{{"n", Rational(7)}};
    CHECK(eval_scalar(add({param("n"), L(3)}), b) == 10);
    CHECK(eval_scalar(floor2(param("n")), b) == 3);
    CHECK(eval_scalar(ceil2(param("n")), b) == 4);
    CHECK(eval_scalar(mul({param("n"), L(-2)}), b) == -14);
    CHECK_THROWS_AS(eval_scalar(param("q"), b), UnboundParam);
}

TEST_CASE("summation with an empty range is zero") {
    // sum over k = 3..1
    ExprPtr e = sum("k", L(3), L(1), param("k"));
    CHECK(eval_exact(e, {}).is_zero());
}

TEST_CASE("alternating sign and powers") {
    ParamBinding b{{"n", Rational(5)}};
    CHECK(eval_exact(altsign(param("n")), b) == PiValue(Rational(-1)));
    CHECK(eval_exact(pow(L(2), neg(param("n"))), b) ==
          PiValue(make_rational(1, 32)));
}

TEST_CASE("guard selection covers parity cases") {
    const Identity& kn = lookup("knuth").identity;
    const CasedRhs* even_case = select_case(kn, {{"n", Rational(4)}});
    const CasedRhs* odd_case = select_case(kn, {{"n", Rational(5)}});
    REQUIRE(even_case);
    REQUIRE(odd_case);
    CHECK(even_case->guard.kind == GuardKind::EvenParam);
    CHECK(odd_case->guard.kind == GuardKind::OddParam);
}

TEST_CASE("instance verification statuses") {
    const Identity& kn = lookup("knuth").identity;
    VerificationResult r = verify_instance(kn, {{"n", Rational(2)}}, {});
    CHECK(r.status == Status::ExactEqual);
    CHECK(r.lhs == "1/2");

    const Identity& hv = lookup("hdj69wz").identity;
    VerificationResult num = verify_instance(
        hv, {{"n", Rational(4)}, {"v", make_rational(3, 10)}}, {true, 30});
    CHECK(num.status == Status::NumericEqual);
    CHECK(num.relerr <= 1e-20);
}

TEST_CASE("declared validity violations are skipped with a uniform note") {
    const Identity& rv = lookup("rvlh5im").identity;  // needs n >= 1
    VerificationResult r = verify_instance(rv, {{"n", Rational(0)}}, {});
    CHECK(r.status == Status::Skipped);
    CHECK(r.note == "outside validity domain");
}

TEST_CASE("sweeps are deterministic across parallelism degrees") {
    const CatalogEntry& e = lookup("knuth-gen");
    auto one = sweep(e.identity, e.default_ranges, {}, 1);
    auto four = sweep(e.identity, e.default_ranges, {}, 4);
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].binding == four[i].binding);
        CHECK(one[i].status == four[i].status);
        CHECK(one[i].lhs == four[i].lhs);
    }
}

TEST_CASE("independent evaluator agrees on randomized instances") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<long> pick_n(0, 12);
    const auto& entries = catalog_entries();
    std::uniform_int_distribution<std::size_t> pick_entry(0,
                                                          entries.size() - 1);
    int compared = 0;
    for (int trial = 0; trial < 300; ++trial) {
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
        PiValue got, want;
        try {
            got = eval_exact(e.identity.lhs, b);
            want = eval_oracle(e.identity.lhs, b);
        } catch (const Error&) {
            continue;  // inadmissible sample for both evaluators
        }
        INFO(e.identity.id << " [" << binding_str(b) << "]");
        CHECK(got == want);
        ++compared;
    }
    CHECK(compared > 100);
}
