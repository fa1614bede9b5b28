#include "curvegerm/resolution.hpp"

#include <numeric>

#include "curvegerm/errors.hpp"

namespace curvegerm {

std::string to_string(const Direction& d) {
    if (d.is_vertical()) return "vertical";
    return "slope " + to_string(d.slope_value());
}

std::string to_string(Chart chart) { return chart == Chart::X ? "x-chart" : "y-chart"; }

TangentData tangent_data(const Polynomial& f) {
    const unsigned m = order(f);
    if (f.constant_term() != 0) {
        throw Error(ErrorKind::NotAGerm, "f(0,0) = " + to_string(f.constant_term()) + " is not zero");
    }
    const Polynomial cone = initial_form(f);

    const Rational lead = cone.coefficient({0, m});
    if (lead == 0) {
        // Only c·x^m is a pure power without a y^m term.
        if (cone.size() == 1 && cone.coefficient({m, 0}) != 0) return {true, Direction::vertical()};
        return {false, std::nullopt};
    }
    // c·(y − t·x)^m has x·y^(m−1) coefficient −m·c·t.
    const Rational t = -cone.coefficient({1, m - 1}) / (lead * m);
    const Polynomial line = Polynomial::y() - Polynomial(Monomial{1, 0}, t);
    if (cone == lead * pow(line, m)) return {true, Direction::slope(t)};
    return {false, std::nullopt};
}

BlowupStep strict_transform_once(const Polynomial& f) {
    const TangentData tangent = tangent_data(f);
    const unsigned m = order(f);
    if (m <= 1) throw Error(ErrorKind::NotSingular, "germ of multiplicity " + std::to_string(m) + " is smooth");
    if (!tangent.pure_power) {
        throw Error(ErrorKind::ReducibleTangentCone, "tangent cone " + to_string(initial_form(f)) +
                                                         " is not a power of a single line");
    }

    BlowupStep step;
    step.direction = *tangent.direction;
    step.multiplicity_before = m;

    Polynomial transformed;
    if (step.direction.is_vertical()) {
        // Chart x = x1·y1, y = y1: x^a y^b ↦ x1^a y1^(a+b−m).
        step.chart = Chart::Y;
        for (const auto& [mono, c] : f.terms()) transformed.add_term({mono.degx, mono.degree() - m}, c);
    } else {
        // Bring the tangent to y = 0, then x = x1, y = x1·y1: x^a y^b ↦ x1^(a+b−m) y1^b.
        step.chart = Chart::X;
        const Rational& t = step.direction.slope_value();
        const Polynomial aligned = t == 0 ? f : substitute_linear(f, AffineMap::linear(1, 0, t, 1));
        for (const auto& [mono, c] : aligned.terms()) transformed.add_term({mono.degree() - m, mono.degy}, c);
    }
    step.strict_transform = std::move(transformed);
    return step;
}

ResolutionSequence resolve_branch(const Polynomial& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "the zero polynomial does not define a curve germ");
    if (f.constant_term() != 0) {
        throw Error(ErrorKind::NotAGerm, "f(0,0) = " + to_string(f.constant_term()) + " is not zero");
    }
    const std::size_t degree = std::max(1u, f.total_degree());
    const std::size_t budget = 10 * degree * degree;

    ResolutionSequence seq;
    seq.input = f;
    Polynomial current = f;
    for (std::size_t stage = 0;; ++stage) {
        if (order(current) == 1) break;
        if (stage >= budget) {
            throw Error(ErrorKind::NonIsolatedSingularity,
                        "strict transforms did not become smooth within " + std::to_string(budget) + " blowups");
        }
        if (!tangent_data(current).pure_power) {
            throw Error(ErrorKind::NotABranch,
                        "tangent cone " + to_string(initial_form(current)) + " of the strict transform has several directions",
                        stage);
        }
        BlowupStep step = strict_transform_once(current);
        if (step.strict_transform == current) {
            throw Error(ErrorKind::NonIsolatedSingularity,
                        "strict transform repeats itself (non-reduced germ)", stage);
        }
        seq.multiplicity_sequence.push_back(step.multiplicity_before);
        current = step.strict_transform;
        seq.steps.push_back(std::move(step));
    }
    seq.final_smooth = std::move(current);
    return seq;
}

std::size_t delta_from_multiplicities(const std::vector<unsigned>& multiplicities) {
    std::size_t delta = 0;
    for (unsigned m : multiplicities) delta += static_cast<std::size_t>(m) * (m - 1) / 2;
    return delta;
}

std::size_t delta_from_sequence(const ResolutionSequence& seq) {
    return delta_from_multiplicities(seq.multiplicity_sequence);
}

std::size_t mu_topological(const ResolutionSequence& seq) {
    std::size_t mu = 0;
    for (unsigned m : seq.multiplicity_sequence) mu += static_cast<std::size_t>(m) * (m - 1);
    return mu;
}

}  // namespace curvegerm
