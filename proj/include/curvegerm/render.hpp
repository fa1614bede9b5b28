#pragma once

#include <json.hpp>
#include <string>

#include "curvegerm/compare.hpp"
#include "curvegerm/invariants.hpp"
#include "curvegerm/resolution.hpp"

namespace curvegerm {

using Json = nlohmann::ordered_json;

// JSON renderings with stable field order. Branch-only fields of a report
// are null (never omitted) for reducible germs.
Json to_json(const InvariantReport& report);
Json to_json(const LawCheck& check, std::size_t stage);
Json to_json(const PuiseuxCharacteristic& c);
Json to_json(const ResolutionSequence& seq, const std::vector<std::int64_t>& chain);
Json to_json(const ComparisonVerdict& verdict);

std::string to_table(const InvariantReport& report);
std::string to_table(const ResolutionSequence& seq, const std::vector<std::int64_t>& chain);
std::string to_table(const ComparisonVerdict& verdict);

/// Integer as a JSON integer, half-integer as an exact decimal, otherwise "a/b".
Json rational_to_json(const Rational& q);

std::string join(const std::vector<unsigned>& values);
std::string join(const std::vector<std::int64_t>& values);

}  // namespace curvegerm
