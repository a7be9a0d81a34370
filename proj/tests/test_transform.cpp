#include "doctest.h"

#include "binomid/catalog.hpp"
#include "binomid/transform.hpp"

using namespace binomid;

namespace {

// small shared comparison grid
SweepRanges small_ranges(const Identity& a, const Identity& b, long n_max) {
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

void check_reproduces(const Identity& derived, const std::string& catalog_id,
                      long n_max = 6) {
    Identity target = lookup(catalog_id).identity;
    INFO(derived.id << " vs " << catalog_id);
    CHECK(extensionally_equal(derived, target,
                              small_ranges(derived, target, n_max)));
}

}  // namespace

TEST_CASE("input forms are registered and validated") {
    CHECK(standard_forms().size() == 3);
    CHECK(symmetric_forms().size() == 2);
    for (const char* name : {"binomial", "binomial-x", "simons"})
        CHECK(standard_form(name).name == name);
    for (const char* name : {"waring", "waring-dual"})
        CHECK(symmetric_form(name).name == name);
    CHECK_THROWS_AS(standard_form("nope"), UnknownId);
}

TEST_CASE("kernel integration over the unit interval") {
    check_reproduces(t_beta01(standard_form("binomial"), std::nullopt,
                              std::nullopt),
                     "sf62i7f", 8);
    // the u = v = 0 particular emits the simplified closed form
    Identity part = t_beta01(standard_form("binomial"), Rational(0),
                             Rational(0));
    check_reproduces(part, "sf62i7f-part", 10);
}

TEST_CASE("power-side substitution pair") {
    auto pair = t_power_form(standard_form("binomial"), std::nullopt);
    check_reproduces(pair.first, "qd43spp");
    auto pair_x = t_power_form(standard_form("binomial-x"), std::nullopt);
    check_reproduces(pair_x.first, "p9vcynz");
}

TEST_CASE("negative-square substitution") {
    check_reproduces(t_sin_sub(standard_form("binomial"), std::nullopt,
                               std::nullopt),
                     "tnrm6l2");
}

TEST_CASE("parity-splitting cosine substitution") {
    check_reproduces(t_cos_parity(standard_form("simons"), std::nullopt,
                                  ParitySide::ForwardOnQ),
                     "s9xhgba");
}

TEST_CASE("half-angle substitution on the symmetric form") {
    check_reproduces(t_sym_sin(symmetric_form("waring"), std::nullopt),
                     "rvlh5im");
}

TEST_CASE("emitted identities carry derivable names and sources") {
    Identity d = t_beta01(standard_form("binomial"), Rational(1),
                          make_rational(1, 2));
    CHECK(d.id == "binomial:beta01(u=1,v=1/2)");
    CHECK(d.source.find("binomial") != std::string::npos);
    Identity s = t_beta01(standard_form("binomial"), std::nullopt,
                          std::nullopt);
    CHECK(s.id == "binomial:beta01");
    // symbolic letters become declared grid parameters
    bool has_u = false, has_v = false;
    for (const auto& p : s.params) {
        has_u = has_u || (p.name == "u" && p.kind == ParamKind::GridReal);
        has_v = has_v || (p.name == "v" && p.kind == ParamKind::GridReal);
    }
    CHECK(has_u);
    CHECK(has_v);
}

TEST_CASE("inadmissible concrete exponents are rejected") {
    CHECK_THROWS_AS(t_beta01(standard_form("binomial"), Rational(-2),
                             Rational(0)),
                    OutOfDomain);
    CHECK_THROWS_AS(t_beta01(standard_form("binomial"), make_rational(1, 3),
                             Rational(0)),
                    OutOfDomain);
}
