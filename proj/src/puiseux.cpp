#include <numeric>

#include "curvegerm/errors.hpp"
#include "curvegerm/resolution.hpp"

namespace curvegerm {

namespace {

[[noreturn]] void invalid(const std::string& why) { throw Error(ErrorKind::InvalidCharacteristic, why); }

[[noreturn]] void inconsistent(const std::vector<unsigned>& seq, const std::string& why) {
    std::string text = "[";
    for (std::size_t i = 0; i < seq.size(); ++i) text += (i ? ", " : "") + std::to_string(seq[i]);
    throw Error(ErrorKind::InconsistentSequence, "multiplicity sequence " + text + "] " + why);
}

}  // namespace

PuiseuxCharacteristic::PuiseuxCharacteristic(unsigned multiplicity, std::vector<unsigned> betas)
    : multiplicity_(multiplicity), betas_(std::move(betas)) {
    if (multiplicity_ == 0) invalid("multiplicity must be positive");
    if (multiplicity_ == 1) {
        if (!betas_.empty()) invalid("a smooth branch has no characteristic exponents");
        return;
    }
    if (betas_.empty()) invalid("a singular branch needs at least one characteristic exponent");
    if (betas_.front() <= multiplicity_) invalid("beta_1 must exceed the multiplicity");
    unsigned e = multiplicity_;
    unsigned previous = 0;
    for (unsigned beta : betas_) {
        if (beta <= previous) invalid("characteristic exponents must increase strictly");
        const unsigned next = std::gcd(e, beta);
        if (next == e) invalid("beta " + std::to_string(beta) + " is divisible by e = " + std::to_string(e));
        e = next;
        previous = beta;
    }
    if (e != 1) invalid("the gcd chain must end at 1");
}

std::vector<unsigned> PuiseuxCharacteristic::gcd_chain() const {
    std::vector<unsigned> chain{multiplicity_};
    for (unsigned beta : betas_) chain.push_back(std::gcd(chain.back(), beta));
    return chain;
}

std::string to_string(const PuiseuxCharacteristic& c) {
    std::string out = "(" + std::to_string(c.multiplicity()) + ";";
    for (std::size_t i = 0; i < c.betas().size(); ++i) out += (i ? "," : "") + std::to_string(c.betas()[i]);
    return out + ")";
}

std::vector<unsigned> expected_sequence_from_characteristic(const PuiseuxCharacteristic& c) {
    std::vector<unsigned> seq;
    unsigned e = c.multiplicity();
    unsigned previous = 0;
    for (unsigned beta : c.betas()) {
        unsigned a = beta - previous;
        unsigned b = e;
        while (b > 0) {
            if (b >= 2) seq.insert(seq.end(), a / b, b);
            const unsigned r = a % b;
            a = b;
            b = r;
        }
        e = a;
        previous = beta;
    }
    return seq;
}

// Reads the sequence as consecutive Euclidean runs. Within one
// characteristic pair the remainders are forced: after `divisor` repeated q
// times comes `dividend mod divisor`. When a divisor divides its dividend
// the pair closes with e = divisor, and any surplus copies of e open the
// next pair. Missing entries past the end are implicit 1s.
PuiseuxCharacteristic characteristic_from_multiplicities(const std::vector<unsigned>& seq) {
    if (seq.empty()) return PuiseuxCharacteristic(1, {});
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] < 2) inconsistent(seq, "has an entry below 2");
        if (i > 0 && seq[i] > seq[i - 1]) inconsistent(seq, "is not non-increasing");
    }

    const std::size_t n = seq.size();
    auto value_at = [&](std::size_t k) { return k < n ? seq[k] : 1u; };
    auto run_length = [&](std::size_t k) {
        std::size_t end = k;
        while (end < n && seq[end] == seq[k]) ++end;
        return end - k;
    };

    const unsigned m = seq[0];
    std::size_t k = run_length(0);
    std::vector<unsigned> betas{static_cast<unsigned>(k) * m + value_at(k)};

    unsigned dividend = m;
    unsigned divisor = value_at(k);
    while (divisor > 1) {
        const std::size_t count = run_length(k);
        const unsigned after = value_at(k + count);
        const unsigned quotient = dividend / divisor;
        const unsigned remainder = dividend % divisor;
        if (remainder != 0) {
            if (count != quotient || after != remainder) {
                inconsistent(seq, "breaks the Euclidean chain at position " + std::to_string(k));
            }
        } else {
            if (count < quotient) inconsistent(seq, "ends a characteristic pair early at position " + std::to_string(k));
            const unsigned surplus = static_cast<unsigned>(count) - quotient;
            betas.push_back(betas.back() + surplus * divisor + after);
        }
        k += count;
        dividend = divisor;
        divisor = after;
    }

    PuiseuxCharacteristic result = [&] {
        try {
            return PuiseuxCharacteristic(m, betas);
        } catch (const Error& e) {
            inconsistent(seq, std::string("decodes to an invalid characteristic: ") + e.what());
        }
    }();
    if (expected_sequence_from_characteristic(result) != seq) inconsistent(seq, "does not round-trip");
    return result;
}

PuiseuxCharacteristic characteristic_from_sequence(const ResolutionSequence& seq) {
    return characteristic_from_multiplicities(seq.multiplicity_sequence);
}

}  // namespace curvegerm
