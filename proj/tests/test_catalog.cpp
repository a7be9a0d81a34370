#include "doctest.h"

#include <set>

#include "binomid/catalog.hpp"
#include "binomid/special.hpp"

using namespace binomid;

namespace {

Rational exact_value(const std::string& id, long n) {
    const Identity& ident = lookup(id).identity;
    ParamBinding b{{"n", Rational(n)}};
    PiValue v = eval_exact(ident.lhs, b);
    REQUIRE(v.is_rational());
    return v.as_rational();
}

}  // namespace

TEST_CASE("registry size and uniqueness") {
    const auto& entries = catalog_entries();
    CHECK(entries.size() >= 45);
    std::set<std::string> ids;
    for (const auto& e : entries) {
        CHECK(ids.insert(e.identity.id).second);
        CHECK(!e.location.empty());
        CHECK(!e.quote.empty());
        // every parameter has a sweep range
        for (const auto& p : e.identity.params)
            CHECK(e.default_ranges.count(p.name) == 1);
    }
    CHECK_THROWS_AS(lookup("no-such-id"), UnknownId);
}

TEST_CASE("frozen spot values") {
    CHECK(exact_value("knuth", 2) == make_rational(1, 2));
    CHECK(exact_value("ilslov7", 2) == 6);
    CHECK(exact_value("ef9et5k", 2) == 4);
    CHECK(exact_value("amk3put", 2) == make_rational(2, 3));
    CHECK(exact_value("ct31is7", 1) == make_rational(1, 2));
    CHECK(exact_value("complement2", 2) == 16);
}

TEST_CASE("flagship sums at larger sizes") {
    // even n: 2^{-n} C(n, n/2); odd n: exactly zero
    CHECK(exact_value("knuth", 20) ==
          Rational(binom_int(20, 10)) / Rational(1 << 20));
    CHECK(exact_value("knuth", 21) == 0);
    CHECK(exact_value("complement2", 12) == Rational(1L << 24));
}

TEST_CASE("single-parameter entries get the longer default range") {
    const auto& r = lookup("knuth").default_ranges.at("n");
    CHECK(r.size() == 26);
    CHECK(r.front() == 0);
    CHECK(r.back() == 25);
}

TEST_CASE("cross-entry reductions") {
    // the two-parameter generalization at m = 0
    const Identity& gen = lookup("knuth-gen").identity;
    const Identity& kn = lookup("knuth").identity;
    for (long n = 0; n <= 12; ++n) {
        ParamBinding bg{{"n", Rational(n)}, {"m", Rational(0)}};
        ParamBinding bk{{"n", Rational(n)}};
        CHECK(eval_exact(gen.lhs, bg) == eval_exact(kn.lhs, bk));
    }
    // the grid-parameter generalization at v = 0
    const Identity& hv = lookup("hdj69wz").identity;
    for (long n = 0; n <= 12; ++n) {
        ParamBinding bv{{"n", Rational(n)}, {"v", Rational(0)}};
        ParamBinding bk{{"n", Rational(n)}};
        CHECK(eval_exact(hv.lhs, bv) == eval_exact(kn.lhs, bk));
    }
    // the free-parameter family at x = 0 and x = 1
    const Identity& qd = lookup("qd43spp").identity;
    const Identity& y6 = lookup("y6pnymc").identity;
    for (long n = 0; n <= 10; ++n) {
        for (Rational v : {Rational(0), Rational(2)}) {
            ParamBinding b0{{"n", Rational(n)}, {"v", v}, {"x", Rational(0)}};
            ParamBinding bh{{"n", Rational(n)}, {"v", v}};
            CHECK(eval_exact(qd.lhs, b0) == eval_exact(hv.lhs, bh));
            ParamBinding b1{{"n", Rational(n)}, {"v", v}, {"x", Rational(1)}};
            CHECK(eval_exact(qd.lhs, b1) == eval_exact(y6.lhs, bh));
        }
    }
    // the two closed forms of the squared-binomial sum agree
    const Identity& ef = lookup("ef9et5k").identity;
    const Identity& ef2 = lookup("ef9et5k-alt").identity;
    for (long n = 0; n <= 30; ++n) {
        ParamBinding b{{"n", Rational(n)}};
        const CasedRhs* a = select_case(ef, b);
        const CasedRhs* c = select_case(ef2, b);
        REQUIRE(a);
        REQUIRE(c);
        CHECK(eval_exact(a->expr, b) == eval_exact(c->expr, b));
    }
}

TEST_CASE("default sweeps of the flagship entries are clean") {
    for (const char* id : {"knuth", "complement1", "complement2", "ilslov7",
                           "ef9et5k", "amk3put", "ct31is7"}) {
        const CatalogEntry& e = lookup(id);
        auto results = sweep(e.identity, e.default_ranges, {}, 2);
        for (const auto& r : results) {
            INFO(id << " [" << binding_str(r.binding) << "]");
            CHECK(r.status == Status::ExactEqual);
        }
    }
}
