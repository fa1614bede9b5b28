#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvegerm/invariants.hpp"
#include "curvegerm/parser.hpp"
#include "curvegerm/render.hpp"

namespace curvegerm {

/// One line of a corpus file: `id <TAB> polynomial [<TAB> key=value,...]`.
struct CorpusEntry {
    std::string id;
    std::string polynomial;
    std::map<std::string, std::int64_t> expected;
    std::size_t line = 0;
};

/// Keys allowed in the expected-value column.
const std::vector<std::string>& expected_keys();

/// Parses corpus text. Every malformed line is collected into a single
/// MalformedCorpus error whose message lists "line N: ..." diagnostics.
std::vector<CorpusEntry> parse_corpus(const std::string& text, unsigned max_degree = kDefaultMaxDegree);

/// Reads a corpus file. A missing path that names a bundled corpus (e.g.
/// "branches") resolves to that file. Throws FileNotFound or MalformedCorpus.
std::vector<CorpusEntry> load_corpus(const std::string& path, unsigned max_degree = kDefaultMaxDegree);

std::filesystem::path bundled_corpus_dir();

enum class EntryStatus { Pass, Fail, Error };

struct CorpusResult {
    CorpusEntry entry;
    EntryStatus status = EntryStatus::Pass;
    std::optional<InvariantReport> report;
    std::vector<std::string> failures;
    std::string error;
};

/// Analyzes every entry with up to `jobs` worker threads. Results are sorted
/// by id, independent of scheduling.
std::vector<CorpusResult> run_corpus(const std::vector<CorpusEntry>& entries, unsigned jobs,
                                     unsigned max_degree = kDefaultMaxDegree);

/// Checks applied to a single analyzed entry (expected values, and for
/// branches the blowup laws, theorem chain, μ/τ bound and μ = 2δ).
std::vector<std::string> entry_failures(const CorpusEntry& entry, const InvariantReport& report);

Json corpus_to_json(const std::vector<CorpusResult>& results);
std::string corpus_to_table(const std::vector<CorpusResult>& results);
bool corpus_all_passed(const std::vector<CorpusResult>& results);

}  // namespace curvegerm
