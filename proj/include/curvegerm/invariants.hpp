#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "curvegerm/polynomial.hpp"
#include "curvegerm/resolution.hpp"

namespace curvegerm {

/// Per-blowup verification of the μ-drop law, the τ-drop lower bound and
/// strict growth of 3μ − 4τ.
struct LawCheck {
    unsigned m = 0;
    std::int64_t mu_drop = 0;
    std::int64_t tau_drop = 0;
    std::uint64_t dmin_lower = 0;
    std::int64_t monotone_before = 0;
    std::int64_t monotone_after = 0;
    bool mu_drop_exact = false;               // mu_drop == m(m−1)
    bool tau_drop_bound_ok = false;           // tau_drop >= m(m−1)/2 + dmin_lower
    bool monotone_strictly_increased = false;

    bool all_ok() const noexcept { return mu_drop_exact && tau_drop_bound_ok && monotone_strictly_increased; }
};

struct InvariantReport {
    Polynomial input;
    unsigned multiplicity = 0;
    std::size_t milnor = 0;
    std::size_t tjurina = 0;
    std::int64_t monotone = 0;  // 3μ − 4τ
    Rational differential_gap;  // τ − μ/2
    bool is_branch = false;
    /// μ/τ < 4/3; set for singular germs only.
    std::optional<bool> ratio_ok;

    // Branch-only data.
    std::optional<std::size_t> delta;
    std::optional<PuiseuxCharacteristic> characteristic;
    std::optional<std::vector<unsigned>> multiplicity_sequence;
    std::optional<std::vector<LawCheck>> law_checks;
    std::optional<std::vector<std::int64_t>> theorem_chain;
};

std::int64_t monotone_invariant(std::size_t milnor, std::size_t tjurina);

/// Full report. Throws the local-algebra errors (ZeroPolynomial, NotAGerm,
/// NonIsolatedSingularity); reducible germs yield is_branch = false.
InvariantReport germ_report(const Polynomial& f);

/// Lower bound for D_min from the p1 bounds (p1 >= 1 for even m, >= 0 for odd m):
/// m(m−1)/2 − ((⌊m/2⌋ − 1)(m − ⌊m/2⌋) + 1 − p1). Throws MultiplicityTooSmall.
std::uint64_t dmin_lower(std::uint64_t m);

/// dmin_lower(m) > m(m−1)/4, in integers.
bool claim_check(std::uint64_t m);

/// One blowup of a singular branch. Throws NotABranch or NotSingular.
LawCheck blowup_law_check(const Polynomial& f);

/// 3μ − 4τ along the minimal resolution, ending with the smooth transform.
std::vector<std::int64_t> theorem_verify(const Polynomial& f);

/// True iff the chain is strictly increasing, negative before the end and ends at 0.
bool chain_is_valid(const std::vector<std::int64_t>& chain);

/// 3μ < 4τ. Throws SmoothGerm for μ = 0.
bool ratio_check(const InvariantReport& report);

}  // namespace curvegerm
