#include "curvegerm/invariants.hpp"

#include "curvegerm/errors.hpp"
#include "curvegerm/local_algebra.hpp"

namespace curvegerm {

namespace {

struct StageInvariants {
    std::size_t milnor;
    std::size_t tjurina;
};

std::vector<StageInvariants> stage_invariants(const ResolutionSequence& seq,
                                              std::optional<StageInvariants> first = std::nullopt) {
    std::vector<StageInvariants> out;
    out.push_back(first ? *first : StageInvariants{milnor_number(seq.input), tjurina_number(seq.input)});
    for (const auto& step : seq.steps) {
        out.push_back({milnor_number(step.strict_transform), tjurina_number(step.strict_transform)});
    }
    return out;
}

LawCheck law_check_between(unsigned m, const StageInvariants& before, const StageInvariants& after) {
    LawCheck check;
    check.m = m;
    check.mu_drop = static_cast<std::int64_t>(before.milnor) - static_cast<std::int64_t>(after.milnor);
    check.tau_drop = static_cast<std::int64_t>(before.tjurina) - static_cast<std::int64_t>(after.tjurina);
    check.dmin_lower = dmin_lower(m);
    check.monotone_before = monotone_invariant(before.milnor, before.tjurina);
    check.monotone_after = monotone_invariant(after.milnor, after.tjurina);
    const std::int64_t mm1 = static_cast<std::int64_t>(m) * (m - 1);
    check.mu_drop_exact = check.mu_drop == mm1;
    check.tau_drop_bound_ok = check.tau_drop >= mm1 / 2 + static_cast<std::int64_t>(check.dmin_lower);
    check.monotone_strictly_increased = check.monotone_after > check.monotone_before;
    return check;
}

std::vector<LawCheck> law_checks_along(const ResolutionSequence& seq, const std::vector<StageInvariants>& stages) {
    std::vector<LawCheck> checks;
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        checks.push_back(law_check_between(seq.multiplicity_sequence[i], stages[i], stages[i + 1]));
    }
    return checks;
}

std::vector<std::int64_t> chain_of(const std::vector<StageInvariants>& stages) {
    std::vector<std::int64_t> chain;
    for (const auto& s : stages) chain.push_back(monotone_invariant(s.milnor, s.tjurina));
    return chain;
}

}  // namespace

std::int64_t monotone_invariant(std::size_t milnor, std::size_t tjurina) {
    return 3 * static_cast<std::int64_t>(milnor) - 4 * static_cast<std::int64_t>(tjurina);
}

std::uint64_t dmin_lower(std::uint64_t m) {
    if (m < 2) throw Error(ErrorKind::MultiplicityTooSmall, "D_min bound needs multiplicity >= 2");
    const std::uint64_t half = m / 2;
    const std::uint64_t p1_lower = m % 2 == 0 ? 1 : 0;
    const std::uint64_t braces = (half - 1) * (m - half) + 1 - p1_lower;
    return m * (m - 1) / 2 - braces;
}

bool claim_check(std::uint64_t m) { return 4 * dmin_lower(m) > m * (m - 1); }

InvariantReport germ_report(const Polynomial& f) {
    InvariantReport report;
    report.input = f;
    report.milnor = milnor_number(f);
    report.multiplicity = order(f);
    report.tjurina = tjurina_number(f);
    report.monotone = monotone_invariant(report.milnor, report.tjurina);
    report.differential_gap = Rational(report.tjurina) - Rational(report.milnor, 2);
    report.differential_gap.canonicalize();
    if (report.milnor > 0) report.ratio_ok = ratio_check(report);

    std::optional<ResolutionSequence> seq;
    try {
        seq = resolve_branch(f);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotABranch) throw;
    }
    report.is_branch = seq.has_value();
    if (!seq) return report;

    const auto stages = stage_invariants(*seq, StageInvariants{report.milnor, report.tjurina});
    report.delta = delta_from_sequence(*seq);
    report.characteristic = characteristic_from_sequence(*seq);
    report.multiplicity_sequence = seq->multiplicity_sequence;
    report.law_checks = law_checks_along(*seq, stages);
    report.theorem_chain = chain_of(stages);
    return report;
}

LawCheck blowup_law_check(const Polynomial& f) {
    const ResolutionSequence seq = resolve_branch(f);
    if (seq.steps.empty()) throw Error(ErrorKind::NotSingular, "smooth germ has no singular blowup");
    const StageInvariants before{milnor_number(f), tjurina_number(f)};
    const Polynomial& next = seq.steps.front().strict_transform;
    const StageInvariants after{milnor_number(next), tjurina_number(next)};
    return law_check_between(seq.multiplicity_sequence.front(), before, after);
}

std::vector<std::int64_t> theorem_verify(const Polynomial& f) {
    return chain_of(stage_invariants(resolve_branch(f)));
}

bool chain_is_valid(const std::vector<std::int64_t>& chain) {
    if (chain.empty() || chain.back() != 0) return false;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        if (chain[i] >= 0 || chain[i] >= chain[i + 1]) return false;
    }
    return true;
}

bool ratio_check(const InvariantReport& report) {
    if (report.milnor == 0) throw Error(ErrorKind::SmoothGerm, "mu/tau is undefined for a smooth germ");
    return 3 * report.milnor < 4 * report.tjurina;
}

}  // namespace curvegerm
