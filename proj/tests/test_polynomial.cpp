#include <doctest.h>

#include <random>

#include "curvegerm/errors.hpp"
#include "curvegerm/parser.hpp"
#include "curvegerm/polynomial.hpp"

using namespace curvegerm;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

ErrorKind kind_of(const char* text, unsigned max_degree = kDefaultMaxDegree) {
    try {
        parse_polynomial(text, max_degree);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error for " << text);
    return ErrorKind::SyntaxError;
}

Polynomial random_polynomial(std::mt19937& rng, unsigned max_deg, int terms) {
    std::uniform_int_distribution<unsigned> deg(0, max_deg);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
    Polynomial f;
    for (int i = 0; i < terms; ++i) {
        const unsigned a = deg(rng);
        const unsigned b = deg(rng) % (max_deg - a + 1);
        Rational c(num(rng), den(rng));
        c.canonicalize();
        f.add_term({a, b}, c);
    }
    return f;
}

}  // namespace

TEST_CASE("parse examples") {
    const Polynomial cusp = P("y^2 - x^3");
    CHECK(cusp.size() == 2);
    CHECK(cusp.coefficient({0, 2}) == 1);
    CHECK(cusp.coefficient({3, 0}) == -1);

    const Polynomial c = P("x^11 + y^11 + x^6*y^6");
    CHECK(c.size() == 3);
    CHECK(c.coefficient({6, 6}) == 1);

    const Polynomial q = P("3/2 x y - x");
    CHECK(q.coefficient({1, 1}) == Rational(3, 2));
    CHECK(q.coefficient({1, 0}) == -1);
    CHECK(q.size() == 2);
}

TEST_CASE("parse accepts whitespace, explicit products and coefficient stars") {
    CHECK(P("  -2*x^2*y  +  y ") == P("-2 x^2 y + y"));
    CHECK(P("4/6 x") == P("2/3*x"));
    CHECK(P("x*y - x*y").is_zero());
    CHECK(P("0").is_zero());
}

TEST_CASE("parse errors") {
    CHECK(kind_of("") == ErrorKind::SyntaxError);
    CHECK(kind_of("x +") == ErrorKind::SyntaxError);
    CHECK(kind_of("x^") == ErrorKind::SyntaxError);
    CHECK(kind_of("x^0") == ErrorKind::SyntaxError);
    CHECK(kind_of("1/0 x") == ErrorKind::SyntaxError);
    CHECK(kind_of("(y^2-x^3)") == ErrorKind::SyntaxError);
    CHECK(kind_of("x + z") == ErrorKind::UnknownVariable);
    CHECK(kind_of("x^600") == ErrorKind::DegreeTooLarge);
    CHECK(kind_of("x^5*y^5", 9) == ErrorKind::DegreeTooLarge);
}

TEST_CASE("printing is canonical and round-trips") {
    CHECK(to_string(P("3/2 x y - x")) == "-x + 3/2 x*y");
    CHECK(to_string(P("x^11 + y^11 + x^6*y^6")) == "y^11 + x^11 + x^6*y^6");
    CHECK(to_string(Polynomial()) == "0");
    std::mt19937 rng(1234);
    for (int i = 0; i < 200; ++i) {
        const Polynomial f = random_polynomial(rng, 12, 6);
        CHECK(parse_polynomial(to_string(f)) == f);
    }
}

TEST_CASE("order and initial form") {
    CHECK(order(P("y^2 - x^3")) == 2);
    CHECK(order(P("x^11 + y^11 + x^6*y^6")) == 11);
    CHECK(order(P("x + y^5")) == 1);
    CHECK_THROWS_AS(order(Polynomial()), Error);

    CHECK(initial_form(P("y^2 - x^3")) == P("y^2"));
    CHECK(initial_form(P("y^2 - 2x*y + x^2 + x^5")) == pow(P("y - x"), 2));
    CHECK(initial_form(P("x^3 + y^5")) == P("x^3"));
}

TEST_CASE("order and initial form are multiplicative") {
    std::mt19937 rng(77);
    for (int i = 0; i < 100; ++i) {
        const Polynomial f = random_polynomial(rng, 8, 4);
        const Polynomial g = random_polynomial(rng, 8, 4);
        if (f.is_zero() || g.is_zero()) continue;
        CHECK(order(f * g) == order(f) + order(g));
        CHECK(initial_form(f * g) == initial_form(f) * initial_form(g));
    }
}

TEST_CASE("linear substitutions") {
    CHECK(substitute_linear(P("y^2 - x"), AffineMap::linear(1, 0, 1, 1)) == P("y^2 + 2x*y + x^2 - x"));
    const Polynomial f = P("y^2 - x^3 + 5/7 x*y^4");
    CHECK(substitute_linear(f, AffineMap::identity()) == f);
    CHECK(compose(P("y^2 - x^3"), Polynomial::y(), Polynomial::x()) == P("x^2 - y^3"));
    CHECK_THROWS_AS(substitute_linear(f, AffineMap::linear(1, 2, 2, 4)), Error);

    // A map followed by its inverse is the identity.
    const Polynomial g = substitute_linear(f, AffineMap::linear(2, 1, 1, 1));
    CHECK(substitute_linear(g, AffineMap::linear(1, -1, -1, 2)) == f);
}

TEST_CASE("partial derivatives") {
    CHECK(partials(P("y^2 - x^3")) == std::pair{P("-3x^2"), P("2y")});
    CHECK(partials(P("7")) == std::pair{Polynomial(), Polynomial()});
    CHECK(partials(P("x^6*y^6")) == std::pair{P("6x^5*y^6"), P("6x^6*y^5")});
}

TEST_CASE("truncation and division by x powers") {
    CHECK(truncate(P("1 + x + x*y + y^3"), 1) == P("1 + x"));
    CHECK(divide_by_x_power(P("x^3*y + x^2"), 2) == P("x*y + 1"));
    CHECK_THROWS_AS(divide_by_x_power(P("x*y + x^2"), 2), std::invalid_argument);
}
