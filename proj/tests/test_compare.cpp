#include <doctest.h>

#include "curvegerm/compare.hpp"
#include "curvegerm/parser.hpp"

using namespace curvegerm;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

bool has_reason(const ComparisonVerdict& v, const std::string& prefix) {
    for (const auto& r : v.reasons) {
        if (r.rfind(prefix, 0) == 0) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("first comparison pair") {
    const auto v = not_smoother(P("x^9 + y^9 + x^6*y^6"), P("x^11 + y^11 + x^6*y^6"));
    CHECK(v.verdict == Verdict::NotSmoother);
    REQUIRE(has_reason(v, "(a') "));
    for (const auto& r : v.reasons) {
        if (r.rfind("(a') ", 0) == 0) {
            CHECK(r.find("-48 < -36") != std::string::npos);
            CHECK(r.find("theorem proven for branches only") != std::string::npos);
        }
    }
}

TEST_CASE("second comparison pair") {
    const auto v = not_smoother(P("x^11 + y^10 + x^6*y^6"), P("x^13 + y^12 + x^6*y^7"));
    CHECK(v.verdict == Verdict::NotSmoother);
    CHECK(has_reason(v, "(a) "));
    CHECK(v.candidate.monotone == -42);
    CHECK(v.base.monotone == -36);
}

TEST_CASE("reflexive comparison is inconclusive") {
    const auto v = not_smoother(P("y^2 - x^3"), P("y^2 - x^3"));
    CHECK(v.verdict == Verdict::Inconclusive);
    CHECK(v.reasons.empty());
}

TEST_CASE("mu and tau screens") {
    const auto v = not_smoother(P("y^2 - x^5"), P("y^2 - x^3"));
    CHECK(v.verdict == Verdict::NotSmoother);
    CHECK(has_reason(v, "(b) "));
    CHECK(has_reason(v, "(c) "));
}

TEST_CASE("sequence suffix screen") {
    // (3;4) has sequence [3]; (2;5) has [2, 2]. [3] is not a suffix of [2, 2].
    const auto v = not_smoother(P("x^3 + y^4"), P("y^2 - x^5"));
    CHECK(has_reason(v, "(d) "));
}

TEST_CASE("strict transforms are never certified not smoother") {
    for (const char* text : {"x^3 + y^5", "y^2 - x^7", "x^3 + y^7 + x*y^5", "y^4 - 2x^3*y^2 + x^6 - 4x^5*y - x^7",
                             "x^5 + y^8"}) {
        const Polynomial base = P(text);
        const ResolutionSequence seq = resolve_branch(base);
        CHECK(not_smoother(base, base).verdict == Verdict::Inconclusive);
        for (const auto& step : seq.steps) {
            CHECK(not_smoother(step.strict_transform, base).verdict == Verdict::Inconclusive);
            if (order(step.strict_transform) == 1) continue;
            CHECK(not_smoother(base, step.strict_transform).verdict == Verdict::NotSmoother);
        }
        CHECK(not_smoother(base, seq.steps.front().strict_transform).verdict == Verdict::NotSmoother);
    }
}
