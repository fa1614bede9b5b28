#include <doctest.h>

#include <numeric>

#include "curvegerm/errors.hpp"
#include "curvegerm/local_algebra.hpp"
#include "curvegerm/parser.hpp"
#include "curvegerm/resolution.hpp"

using namespace curvegerm;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

std::vector<unsigned> V(std::initializer_list<unsigned> v) { return v; }

Error error_of(const Polynomial& f) {
    try {
        resolve_branch(f);
    } catch (const Error& e) {
        return e;
    }
    FAIL("no error for " << to_string(f));
    return Error(ErrorKind::SyntaxError, "");
}

}  // namespace

TEST_CASE("tangent data") {
    const auto cusp = tangent_data(P("y^2 - x^3"));
    CHECK(cusp.pure_power);
    CHECK(cusp.direction == Direction::slope(0));

    const auto e8 = tangent_data(P("x^3 + y^5"));
    CHECK(e8.pure_power);
    CHECK(e8.direction == Direction::vertical());

    CHECK(tangent_data(P("y^2 - x^2*y")).direction == Direction::slope(0));
    CHECK(tangent_data(P("y^2 - 2x*y + x^2 + x^5")).direction == Direction::slope(1));
    CHECK(tangent_data(P("4y^2 - 4x*y + x^2 + y^3")).direction == Direction::slope(Rational(1, 2)));
    CHECK_FALSE(tangent_data(P("x^2 - y^2")).pure_power);
    CHECK_FALSE(tangent_data(P("x^2 + y^2")).pure_power);
    CHECK_THROWS_AS(tangent_data(P("1 + x")), Error);
}

TEST_CASE("strict transforms") {
    const BlowupStep cusp = strict_transform_once(P("y^2 - x^3"));
    CHECK(cusp.strict_transform == P("y^2 - x"));
    CHECK(cusp.multiplicity_before == 2);
    CHECK(cusp.chart == Chart::X);

    const BlowupStep e8 = strict_transform_once(P("x^3 + y^5"));
    CHECK(e8.strict_transform == P("x^3 + y^2"));
    CHECK(e8.multiplicity_before == 3);
    CHECK(e8.chart == Chart::Y);

    CHECK(strict_transform_once(P("y^2 - x^5")).strict_transform == P("y^2 - x^3"));
    CHECK(strict_transform_once(P("y^2 - x^2*y")).strict_transform == P("y^2 - x*y"));
    CHECK(strict_transform_once(P("y^2 - 2x*y + x^2 - x^5")).strict_transform == P("y^2 - x^3"));

    CHECK_THROWS_AS(strict_transform_once(P("x + y^2")), Error);
    CHECK_THROWS_AS(strict_transform_once(P("x^2 - y^2")), Error);
}

TEST_CASE("resolution sequences") {
    CHECK(resolve_branch(P("y^2 - x^3")).multiplicity_sequence == V({2}));
    CHECK(resolve_branch(P("x^3 + y^5")).multiplicity_sequence == V({3, 2}));
    CHECK(resolve_branch(P("y^2 - x^5")).multiplicity_sequence == V({2, 2}));
    CHECK(resolve_branch(P("x^3 + y^7 + x*y^5")).multiplicity_sequence == V({3, 3}));
    CHECK(resolve_branch(P("y^4 - 2x^3*y^2 + x^6 - 4x^5*y - x^7")).multiplicity_sequence == V({4, 2, 2}));
    const ResolutionSequence smooth = resolve_branch(P("x + y^5"));
    CHECK(smooth.steps.empty());
    CHECK(smooth.final_smooth == P("x + y^5"));
}

TEST_CASE("final transform is smooth and steps chain together") {
    const ResolutionSequence seq = resolve_branch(P("x^5 + y^7"));
    REQUIRE(!seq.steps.empty());
    CHECK(order(seq.final_smooth) == 1);
    CHECK(seq.final_smooth == seq.steps.back().strict_transform);
    for (std::size_t i = 0; i + 1 < seq.steps.size(); ++i) {
        CHECK(strict_transform_once(seq.steps[i].strict_transform).strict_transform == seq.steps[i + 1].strict_transform);
    }
}

TEST_CASE("resolution errors") {
    const Error twig = error_of(P("y^2 - x^2*y"));
    CHECK(twig.kind() == ErrorKind::NotABranch);
    CHECK(twig.stage() == 1u);
    CHECK(error_of(P("x*y")).stage() == 0u);
    CHECK(error_of(pow(P("y^2 - x^3"), 2)).kind() == ErrorKind::NonIsolatedSingularity);
    CHECK(error_of(P("y^2")).kind() == ErrorKind::NonIsolatedSingularity);
    CHECK(error_of(Polynomial()).kind() == ErrorKind::ZeroPolynomial);
    CHECK(error_of(P("1 + y^2")).kind() == ErrorKind::NotAGerm);
}

TEST_CASE("delta and topological mu") {
    CHECK(delta_from_multiplicities({2}) == 1);
    CHECK(delta_from_multiplicities({3, 2}) == 4);
    CHECK(delta_from_multiplicities({2, 2}) == 2);
    CHECK(mu_topological(resolve_branch(P("y^2 - x^3"))) == 2);
    CHECK(mu_topological(resolve_branch(P("x^3 + y^5"))) == 8);
    CHECK(mu_topological(resolve_branch(P("y^2 - x^5"))) == 4);
}

TEST_CASE("topological mu agrees with the standard basis") {
    for (const char* text : {"x^4 + y^9", "y^3 - x^10", "x^3 + y^7 + x*y^5", "y^4 - 2x^3*y^2 + x^6 - 4x^5*y - x^7",
                             "y^4 - 2x^3*y^2 + x^6 - x^6*y", "x^5 + y^6 + x^3*y^3"}) {
        const Polynomial f = P(text);
        CHECK(mu_topological(resolve_branch(f)) == milnor_number(f));
    }
}

TEST_CASE("characteristic validation") {
    CHECK_NOTHROW(PuiseuxCharacteristic(1, {}));
    CHECK_NOTHROW(PuiseuxCharacteristic(4, {6, 7}));
    CHECK_THROWS_AS(PuiseuxCharacteristic(0, {}), Error);
    CHECK_THROWS_AS(PuiseuxCharacteristic(2, {}), Error);
    CHECK_THROWS_AS(PuiseuxCharacteristic(4, {6}), Error);
    CHECK_THROWS_AS(PuiseuxCharacteristic(4, {2, 3}), Error);
    CHECK_THROWS_AS(PuiseuxCharacteristic(4, {6, 8, 9}), Error);
    CHECK_THROWS_AS(PuiseuxCharacteristic(3, {6}), Error);
    CHECK(to_string(PuiseuxCharacteristic(4, {6, 7})) == "(4;6,7)");
    CHECK(PuiseuxCharacteristic(4, {6, 7}).gcd_chain() == V({4, 2, 1}));
}

TEST_CASE("characteristic and multiplicity sequences") {
    CHECK(characteristic_from_multiplicities({2}) == PuiseuxCharacteristic(2, {3}));
    CHECK(characteristic_from_multiplicities({3, 2}) == PuiseuxCharacteristic(3, {5}));
    CHECK(characteristic_from_multiplicities({2, 2}) == PuiseuxCharacteristic(2, {5}));
    CHECK(characteristic_from_multiplicities({}) == PuiseuxCharacteristic(1, {}));
    CHECK(expected_sequence_from_characteristic(PuiseuxCharacteristic(2, {3})) == V({2}));
    CHECK(expected_sequence_from_characteristic(PuiseuxCharacteristic(3, {5})) == V({3, 2}));
    CHECK(expected_sequence_from_characteristic(PuiseuxCharacteristic(3, {4})) == V({3}));
    CHECK(expected_sequence_from_characteristic(PuiseuxCharacteristic(4, {6, 7})) == V({4, 2, 2}));
    CHECK(expected_sequence_from_characteristic(PuiseuxCharacteristic(6, {9, 10})) == V({6, 3, 3}));
    CHECK(characteristic_from_sequence(resolve_branch(P("y^4 - 2x^3*y^2 + x^6 - 4x^5*y - x^7"))) ==
          PuiseuxCharacteristic(4, {6, 7}));
    CHECK_THROWS_AS(characteristic_from_multiplicities({3, 1}), Error);
    CHECK_THROWS_AS(characteristic_from_multiplicities({2, 3}), Error);
}

TEST_CASE("delta of the sequence is half the Milnor number for two-pair branches") {
    const Polynomial f = P("y^4 - 2x^3*y^2 + x^6 - x^6*y");
    const ResolutionSequence seq = resolve_branch(f);
    CHECK(characteristic_from_sequence(seq) == PuiseuxCharacteristic(4, {6, 9}));
    CHECK(2 * delta_from_sequence(seq) == milnor_number(f));
}
