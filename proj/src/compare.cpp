#include "curvegerm/compare.hpp"

#include <algorithm>

namespace curvegerm {

namespace {

std::string list_to_string(const std::vector<unsigned>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + std::to_string(values[i]);
    return out + "]";
}

bool is_suffix(const std::vector<unsigned>& tail, const std::vector<unsigned>& whole) {
    return tail.size() <= whole.size() && std::equal(tail.rbegin(), tail.rend(), whole.rbegin());
}

}  // namespace

std::string to_string(Verdict v) { return v == Verdict::NotSmoother ? "NotSmoother" : "Inconclusive"; }

ComparisonVerdict compare_reports(InvariantReport candidate, InvariantReport base) {
    ComparisonVerdict out;
    const bool both_branches = candidate.is_branch && base.is_branch;

    if (candidate.monotone < base.monotone) {
        const std::string detail = "monotone " + std::to_string(candidate.monotone) + " < " +
                                   std::to_string(base.monotone) + " (3mu-4tau of candidate below that of base)";
        if (both_branches) {
            out.reasons.push_back("(a) " + detail);
        } else {
            out.reasons.push_back("(a') " + detail + "; theorem proven for branches only");
        }
    }
    if (candidate.milnor > base.milnor) {
        out.reasons.push_back("(b) milnor " + std::to_string(candidate.milnor) + " > " + std::to_string(base.milnor) +
                              " (mu cannot grow under blowups)");
    }
    if (candidate.tjurina > base.tjurina) {
        out.reasons.push_back("(c) tjurina " + std::to_string(candidate.tjurina) + " > " +
                              std::to_string(base.tjurina) + " (tau cannot grow under blowups)");
    }
    if (both_branches && !is_suffix(*candidate.multiplicity_sequence, *base.multiplicity_sequence)) {
        out.reasons.push_back("(d) multiplicity sequence " + list_to_string(*candidate.multiplicity_sequence) +
                              " is not a suffix of " + list_to_string(*base.multiplicity_sequence));
    }

    out.verdict = out.reasons.empty() ? Verdict::Inconclusive : Verdict::NotSmoother;
    out.candidate = std::move(candidate);
    out.base = std::move(base);
    return out;
}

ComparisonVerdict not_smoother(const Polynomial& candidate, const Polynomial& base) {
    return compare_reports(germ_report(candidate), germ_report(base));
}

}  // namespace curvegerm
