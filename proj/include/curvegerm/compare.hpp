#pragma once

#include <string>
#include <vector>

#include "curvegerm/invariants.hpp"

namespace curvegerm {

enum class Verdict { NotSmoother, Inconclusive };

std::string to_string(Verdict v);

struct ComparisonVerdict {
    InvariantReport candidate;
    InvariantReport base;
    Verdict verdict = Verdict::Inconclusive;
    /// One entry per failed necessary condition for "candidate is obtained
    /// from base by successive blowups".
    std::vector<std::string> reasons;
};

/// Certifies only negatives. Conditions checked:
///   (a)  3μ − 4τ(candidate) < 3μ − 4τ(base), both branches
///   (a') the same comparison when either germ is reducible
///   (b)  μ(candidate) > μ(base)
///   (c)  τ(candidate) > τ(base)
///   (d)  branches: candidate's multiplicity sequence is not a suffix of base's
ComparisonVerdict not_smoother(const Polynomial& candidate, const Polynomial& base);
ComparisonVerdict compare_reports(InvariantReport candidate, InvariantReport base);

}  // namespace curvegerm
