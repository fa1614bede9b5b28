#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "curvegerm/polynomial.hpp"

namespace curvegerm {

/// Projective tangent direction: the line y = t·x, or the line x = 0.
class Direction {
   public:
    static Direction slope(Rational t) { return Direction(std::move(t)); }
    static Direction vertical() { return Direction(); }

    bool is_vertical() const noexcept { return !slope_.has_value(); }
    /// Only meaningful when !is_vertical().
    const Rational& slope_value() const { return *slope_; }

    friend bool operator==(const Direction&, const Direction&) = default;

   private:
    Direction() = default;
    explicit Direction(Rational t) : slope_(std::move(t)) {}
    std::optional<Rational> slope_;
};

std::string to_string(const Direction& d);

/// Tangent cone classification. For a curve meeting the origin along a
/// single line the initial form is c·L^m.
struct TangentData {
    bool pure_power = false;
    /// Set iff pure_power.
    std::optional<Direction> direction;
};

/// Throws NotAGerm or ZeroPolynomial.
TangentData tangent_data(const Polynomial& f);

enum class Chart {
    X,  // x = x1, y = x1·y1
    Y,  // x = x1·y1, y = y1
};

std::string to_string(Chart chart);

struct BlowupStep {
    Chart chart = Chart::X;
    Direction direction = Direction::slope(0);
    unsigned multiplicity_before = 0;
    Polynomial strict_transform;
};

/// One blowup at the origin followed by the chart change putting the
/// (unique) point of the strict transform on the exceptional line at the
/// origin: for slope t, shear y ↦ y + t·x and take f1 = x1^(-m) f(x1, x1·y1);
/// for a vertical tangent, f1 = y1^(-m) f(x1·y1, y1).
/// Throws NotSingular (m <= 1) or ReducibleTangentCone.
BlowupStep strict_transform_once(const Polynomial& f);

struct ResolutionSequence {
    Polynomial input;
    std::vector<BlowupStep> steps;
    /// Multiplicities (all >= 2) of the successive singular infinitely near points.
    std::vector<unsigned> multiplicity_sequence;
    Polynomial final_smooth;
};

/// Blows up until the strict transform is smooth. Throws NotABranch (the
/// error's stage() is the index of the offending strict transform, 0 being
/// f itself), NonIsolatedSingularity, NotAGerm.
ResolutionSequence resolve_branch(const Polynomial& f);

/// Σ m(m−1)/2 over the multiplicity sequence.
std::size_t delta_from_sequence(const ResolutionSequence& seq);
std::size_t delta_from_multiplicities(const std::vector<unsigned>& multiplicities);

/// Σ m(m−1), the Milnor number obtained from the resolution.
std::size_t mu_topological(const ResolutionSequence& seq);

/// Puiseux characteristic (m; β1, ..., βg). A smooth branch is (1;).
class PuiseuxCharacteristic {
   public:
    /// Throws InvalidCharacteristic unless m >= 1, β strictly increasing,
    /// m < β1, and e_i = gcd(e_{i-1}, β_i) strictly decreasing down to 1.
    PuiseuxCharacteristic(unsigned multiplicity, std::vector<unsigned> betas);

    unsigned multiplicity() const noexcept { return multiplicity_; }
    const std::vector<unsigned>& betas() const noexcept { return betas_; }
    /// e_0 = m, e_i = gcd(e_{i-1}, β_i).
    std::vector<unsigned> gcd_chain() const;

    friend bool operator==(const PuiseuxCharacteristic&, const PuiseuxCharacteristic&) = default;

   private:
    unsigned multiplicity_;
    std::vector<unsigned> betas_;
};

std::string to_string(const PuiseuxCharacteristic& c);

/// Singular part of the multiplicity sequence: iterated Euclidean algorithm
/// on (β_i − β_{i−1}, e_{i−1}), entries >= 2 only.
std::vector<unsigned> expected_sequence_from_characteristic(const PuiseuxCharacteristic& c);

/// Inverse of expected_sequence_from_characteristic. Throws InconsistentSequence.
PuiseuxCharacteristic characteristic_from_multiplicities(const std::vector<unsigned>& multiplicities);
PuiseuxCharacteristic characteristic_from_sequence(const ResolutionSequence& seq);

}  // namespace curvegerm
