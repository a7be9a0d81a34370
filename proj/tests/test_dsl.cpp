#include "doctest.h"

#include "binomid/catalog.hpp"
#include "binomid/dsl.hpp"

using namespace binomid;

TEST_CASE("every catalog entry round-trips through the text format") {
    for (const auto& e : catalog_entries()) {
        std::string text = format_identity(e.identity);
        INFO(text);
        Identity back = parse_identity(text);
        CHECK(identity_equal(e.identity, back));
        // and the rendering is a fixed point
        CHECK(format_identity(back) == text);
    }
}

TEST_CASE("reference declarations parse to the catalog objects") {
    Identity kn = parse_identity(
        "identity knuth(n: nat) : sum(k=0..n) (-1)^k * C(n,k) * 2^(-k) * "
        "C(2*k,k) == cases { even(n) => 2^(-n)*C(n,n/2); odd(n) => 0 }");
    CHECK(identity_equal(kn, lookup("knuth").identity));

    Identity conv = parse_identity(
        "identity conv(n: nat) : sum(k=0..n) C(2*(n-k), n-k) * C(2*k, k) == "
        "4^n");
    conv.id = "complement2";  // declared under a local name
    CHECK(identity_equal(conv, lookup("complement2").identity));
}

TEST_CASE("unbound names are rejected with their location") {
    try {
        parse_identity("identity bad(n: nat) : sum(k=0..n) C(n,j) == 0");
        FAIL("expected a binding failure");
    } catch (const BindError& e) {
        CHECK(e.name == "j");
        CHECK(e.span.start > 0);
    }
    // a summation index may not shadow a parameter or an outer index
    CHECK_THROWS_AS(
        parse_identity("identity s(n: nat) : sum(n=0..3) n == 6"), BindError);
    CHECK_THROWS_AS(parse_identity("identity s(n: nat) : sum(k=0..n) "
                                   "sum(k=0..n) k == 0"),
                    BindError);
}

TEST_CASE("malformed inputs fail inside the offending token") {
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
        "identity t(n: nat) : (1 + 2 == 1",
        "identity t(n: nat) : 1 == 1 extra",
        "identity t(n: nat) requires n 1 : 1 == 1",
        "identity t(n: nat) : n ^ == 1",
        "identity t(n: nat) : @ == 1",
    };
    int cases = 0;
    for (const char* text : corpus) {
        ++cases;
        std::string s(text);
        INFO("case " << cases << ": " << s);
        try {
            parse_identity(s);
            FAIL("accepted a malformed declaration");
        } catch (const ParseError& e) {
            CHECK(e.span.start <= e.span.end);
            CHECK(e.span.end <= s.size());
            CHECK(!e.expected.empty());
        }
    }
    CHECK(cases >= 20);
}

TEST_CASE("programs with comments parse in order") {
    auto ids = parse_program(
        "# two declarations\n"
        "identity a(n: nat) : sum(k=0..n) C(n,k) == 2^n\n"
        "identity b(n: nat, v: grid) requires v >= 1/2 :\n"
        "  sum(k=0..n) (-1)^k * C(n,k) / (k + 1) == 1/(n+1)\n");
    REQUIRE(ids.size() == 2);
    CHECK(ids[0].id == "a");
    CHECK(ids[1].params[1].kind == ParamKind::GridReal);
    CHECK(ids[1].validity.clauses.size() == 1);
}

TEST_CASE("derived identity names survive quoting") {
    Identity q = parse_identity(
        "identity \"binomial:beta01(u=0,v=1/2)\"(n: nat) : 1 == 1");
    CHECK(q.id == "binomial:beta01(u=0,v=1/2)");
    CHECK(identity_equal(q, parse_identity(format_identity(q))));
}

TEST_CASE("negative exponents render with explicit parentheses") {
    const Identity& kn = lookup("knuth").identity;
    std::string text = format_identity(kn);
    CHECK(text.find("2^(-k)") != std::string::npos);
    CHECK(text.find("2^(-n)") != std::string::npos);
}
