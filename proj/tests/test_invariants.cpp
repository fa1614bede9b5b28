#include <doctest.h>

#include <numeric>

#include "curvegerm/errors.hpp"
#include "curvegerm/invariants.hpp"
#include "curvegerm/local_algebra.hpp"
#include "curvegerm/parser.hpp"

using namespace curvegerm;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

std::vector<std::int64_t> C(std::initializer_list<std::int64_t> v) { return v; }

}  // namespace

TEST_CASE("reports for the comparison curves") {
    const InvariantReport c1 = germ_report(P("x^11 + y^11 + x^6*y^6"));
    CHECK(c1.milnor == 100);
    CHECK(c1.tjurina == 84);
    CHECK(c1.monotone == -36);
    CHECK(c1.multiplicity == 11);
    CHECK_FALSE(c1.is_branch);
    CHECK_FALSE(c1.delta.has_value());
    CHECK_FALSE(c1.theorem_chain.has_value());

    const InvariantReport c1p = germ_report(P("x^9 + y^9 + x^6*y^6"));
    CHECK(c1p.milnor == 64);
    CHECK(c1p.tjurina == 60);
    CHECK(c1p.monotone == -48);
}

TEST_CASE("report for the cusp") {
    const InvariantReport r = germ_report(P("y^2 - x^3"));
    CHECK(r.milnor == 2);
    CHECK(r.tjurina == 2);
    CHECK(r.monotone == -2);
    CHECK(r.is_branch);
    CHECK(r.delta == 1u);
    CHECK(r.characteristic == PuiseuxCharacteristic(2, {3}));
    CHECK(r.differential_gap == 1);
    CHECK(r.ratio_ok == true);
}

TEST_CASE("smooth germ report") {
    const InvariantReport r = germ_report(P("x + y"));
    CHECK(r.milnor == 0);
    CHECK(r.monotone == 0);
    CHECK(r.is_branch);
    CHECK_FALSE(r.ratio_ok.has_value());
    CHECK(r.theorem_chain == C({0}));
    CHECK(r.law_checks->empty());
}

TEST_CASE("report errors") {
    CHECK_THROWS_AS(germ_report(Polynomial()), Error);
    CHECK_THROWS_AS(germ_report(P("y^2")), Error);
    CHECK_THROWS_AS(germ_report(P("2 + x")), Error);
}

TEST_CASE("dmin lower bound") {
    CHECK(dmin_lower(2) == 1);
    CHECK(dmin_lower(3) == 2);
    CHECK(dmin_lower(4) == 4);
    CHECK(dmin_lower(5) == 6);
    CHECK_THROWS_AS(dmin_lower(1), Error);
    CHECK_THROWS_AS(dmin_lower(0), Error);
}

TEST_CASE("claim arithmetic") {
    CHECK(claim_check(2));
    CHECK(claim_check(3));
    CHECK(claim_check(5));
    for (std::uint64_t m = 2; m <= 2000; ++m) CHECK(claim_check(m));
}

TEST_CASE("blowup laws") {
    const LawCheck cusp = blowup_law_check(P("y^2 - x^3"));
    CHECK(cusp.mu_drop == 2);
    CHECK(cusp.tau_drop == 2);
    CHECK(cusp.dmin_lower == 1);
    CHECK(cusp.monotone_before == -2);
    CHECK(cusp.monotone_after == 0);
    CHECK(cusp.all_ok());

    const LawCheck e8 = blowup_law_check(P("x^3 + y^5"));
    CHECK(e8.mu_drop == 6);
    CHECK(e8.tau_drop == 6);
    CHECK(e8.dmin_lower == 2);
    CHECK(e8.monotone_before == -8);
    CHECK(e8.monotone_after == -2);
    CHECK(e8.all_ok());

    const LawCheck a4 = blowup_law_check(P("y^2 - x^5"));
    CHECK(a4.mu_drop == 2);
    CHECK(a4.tau_drop == 2);
    CHECK(a4.monotone_before == -4);
    CHECK(a4.monotone_after == -2);
    CHECK(a4.all_ok());

    CHECK(blowup_law_check(P("x^3 + y^7 + x*y^5")).all_ok());
    CHECK_THROWS_AS(blowup_law_check(P("x + y^3")), Error);
    CHECK_THROWS_AS(blowup_law_check(P("x^2 - y^2")), Error);
}

TEST_CASE("theorem chains") {
    CHECK(theorem_verify(P("y^2 - x^3")) == C({-2, 0}));
    CHECK(theorem_verify(P("x^3 + y^5")) == C({-8, -2, 0}));
    CHECK(theorem_verify(P("y^2 - x^5")) == C({-4, -2, 0}));
    CHECK(theorem_verify(P("y^4 - 2x^3*y^2 + x^6 - 4x^5*y - x^7")) == C({-8, -4, -2, 0}));
    CHECK_THROWS_AS(theorem_verify(P("x^2 - y^2")), Error);

    CHECK(chain_is_valid(C({-8, -2, 0})));
    CHECK(chain_is_valid(C({0})));
    CHECK_FALSE(chain_is_valid(C({})));
    CHECK_FALSE(chain_is_valid(C({-2, -2, 0})));
    CHECK_FALSE(chain_is_valid(C({-2, 1})));
    CHECK_FALSE(chain_is_valid(C({2, 0})));
}

TEST_CASE("ratio check") {
    InvariantReport r;
    r.milnor = 100;
    r.tjurina = 84;
    CHECK(ratio_check(r));
    r.milnor = 2;
    r.tjurina = 2;
    CHECK(ratio_check(r));
    r.milnor = 132;
    r.tjurina = 108;
    CHECK(ratio_check(r));
    r.milnor = 4;
    r.tjurina = 3;
    CHECK_FALSE(ratio_check(r));
    r.milnor = 0;
    r.tjurina = 0;
    CHECK_THROWS_AS(ratio_check(r), Error);
}

TEST_CASE("branch properties across families") {
    for (unsigned a = 2; a <= 7; ++a) {
        for (unsigned b = a + 1; b <= 12; ++b) {
            if (std::gcd(a, b) != 1) continue;
            const InvariantReport r = germ_report(pow(Polynomial::x(), a) + pow(Polynomial::y(), b));
            REQUIRE(r.is_branch);
            CHECK(r.milnor == 2 * *r.delta);
            CHECK(is_integer(r.differential_gap));
            CHECK(r.differential_gap >= 0);
            CHECK(r.ratio_ok == true);
            CHECK(chain_is_valid(*r.theorem_chain));
            for (const auto& c : *r.law_checks) CHECK(c.all_ok());
        }
    }
}
