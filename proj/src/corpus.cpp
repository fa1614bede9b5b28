#include "curvegerm/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

#include "curvegerm/errors.hpp"

#ifndef CURVEGERM_CORPUS_DIR
#define CURVEGERM_CORPUS_DIR "corpus"
#endif

namespace curvegerm {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(std::move(current));
    return parts;
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::optional<std::int64_t> as_integer(const std::string& s) {
    std::int64_t value = 0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || s.empty()) return std::nullopt;
    return value;
}

std::optional<std::int64_t> reported_value(const std::string& key, const InvariantReport& r) {
    if (key == "multiplicity") return r.multiplicity;
    if (key == "milnor") return static_cast<std::int64_t>(r.milnor);
    if (key == "tjurina") return static_cast<std::int64_t>(r.tjurina);
    if (key == "monotone") return r.monotone;
    if (key == "is_branch") return r.is_branch ? 1 : 0;
    if (key == "delta" && r.delta) return static_cast<std::int64_t>(*r.delta);
    return std::nullopt;
}

const char* status_name(EntryStatus s) {
    switch (s) {
        case EntryStatus::Pass: return "pass";
        case EntryStatus::Fail: return "fail";
        case EntryStatus::Error: return "error";
    }
    return "error";
}

CorpusResult analyze_entry(const CorpusEntry& entry, unsigned max_degree) {
    CorpusResult result;
    result.entry = entry;
    try {
        InvariantReport report = germ_report(parse_polynomial(entry.polynomial, max_degree));
        result.failures = entry_failures(entry, report);
        result.status = result.failures.empty() ? EntryStatus::Pass : EntryStatus::Fail;
        result.report = std::move(report);
    } catch (const Error& e) {
        result.status = EntryStatus::Error;
        result.error = std::string(to_string(e.kind())) + ": " + e.what();
    }
    return result;
}

}  // namespace

const std::vector<std::string>& expected_keys() {
    static const std::vector<std::string> keys{"multiplicity", "milnor", "tjurina", "monotone", "delta", "is_branch"};
    return keys;
}

std::vector<CorpusEntry> parse_corpus(const std::string& text, unsigned max_degree) {
    std::vector<CorpusEntry> entries;
    std::vector<std::string> problems;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const std::string stripped = trim(raw);
        if (stripped.empty() || stripped.front() == '#') continue;

        auto problem = [&](const std::string& what) {
            problems.push_back("line " + std::to_string(line_no) + ": " + what);
        };
        const auto fields = split(raw, '\t');
        if (fields.size() < 2 || fields.size() > 3) {
            problem("expected 2 or 3 tab-separated fields, got " + std::to_string(fields.size()));
            continue;
        }
        CorpusEntry entry;
        entry.id = trim(fields[0]);
        entry.polynomial = trim(fields[1]);
        entry.line = line_no;
        if (entry.id.empty()) {
            problem("empty id");
            continue;
        }
        if (!seen.insert(entry.id).second) {
            problem("duplicate id '" + entry.id + "'");
            continue;
        }
        try {
            parse_polynomial(entry.polynomial, max_degree);
        } catch (const Error& e) {
            problem(std::string(to_string(e.kind())) + ": " + e.what());
            continue;
        }
        bool ok = true;
        if (fields.size() == 3 && !trim(fields[2]).empty()) {
            for (const auto& item : split(trim(fields[2]), ',')) {
                const auto eq = item.find('=');
                const std::string key = trim(item.substr(0, eq));
                const auto& keys = expected_keys();
                if (eq == std::string::npos || std::find(keys.begin(), keys.end(), key) == keys.end()) {
                    problem("bad expectation '" + trim(item) + "'");
                    ok = false;
                    break;
                }
                auto value = as_integer(trim(item.substr(eq + 1)));
                if (!value) {
                    problem("expected value for '" + key + "' is not an integer");
                    ok = false;
                    break;
                }
                entry.expected[key] = *value;
            }
        }
        if (ok) entries.push_back(std::move(entry));
    }
    if (!problems.empty()) {
        std::string message = "malformed corpus:";
        for (const auto& p : problems) message += "\n  " + p;
        throw Error(ErrorKind::MalformedCorpus, message);
    }
    return entries;
}

std::filesystem::path bundled_corpus_dir() { return CURVEGERM_CORPUS_DIR; }

std::vector<CorpusEntry> load_corpus(const std::string& path, unsigned max_degree) {
    std::filesystem::path file(path);
    if (!std::filesystem::exists(file)) {
        const auto bundled = bundled_corpus_dir() / (path + ".tsv");
        if (path.find('/') == std::string::npos && std::filesystem::exists(bundled)) {
            file = bundled;
        } else {
            throw Error(ErrorKind::FileNotFound, "corpus file '" + path + "' not found");
        }
    }
    std::ifstream in(file, std::ios::binary);
    if (!in) throw Error(ErrorKind::FileNotFound, "cannot open corpus file '" + file.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_corpus(buffer.str(), max_degree);
}

std::vector<std::string> entry_failures(const CorpusEntry& entry, const InvariantReport& report) {
    std::vector<std::string> failures;
    for (const auto& [key, expected] : entry.expected) {
        const auto got = reported_value(key, report);
        if (!got) {
            failures.push_back(key + ": expected " + std::to_string(expected) + ", not available");
        } else if (*got != expected) {
            failures.push_back(key + ": expected " + std::to_string(expected) + ", got " + std::to_string(*got));
        }
    }
    if (report.is_branch) {
        if (report.milnor != 2 * *report.delta) {
            failures.push_back("milnor " + std::to_string(report.milnor) + " differs from 2*delta = " +
                               std::to_string(2 * *report.delta));
        }
        for (std::size_t i = 0; i < report.law_checks->size(); ++i) {
            const auto& c = (*report.law_checks)[i];
            if (!c.mu_drop_exact) failures.push_back("blowup " + std::to_string(i) + ": mu drop is not m(m-1)");
            if (!c.tau_drop_bound_ok) failures.push_back("blowup " + std::to_string(i) + ": tau drop below bound");
            if (!c.monotone_strictly_increased) {
                failures.push_back("blowup " + std::to_string(i) + ": 3mu-4tau did not increase");
            }
        }
        if (!chain_is_valid(*report.theorem_chain)) failures.push_back("theorem chain " + join(*report.theorem_chain));
        if (report.ratio_ok && !*report.ratio_ok) failures.push_back("mu/tau >= 4/3");
        if (report.differential_gap < 0) failures.push_back("tau - mu/2 is negative");
    }
    return failures;
}

std::vector<CorpusResult> run_corpus(const std::vector<CorpusEntry>& entries, unsigned jobs, unsigned max_degree) {
    std::vector<CorpusResult> results(entries.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(entries.size())));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < entries.size(); i = next++) results[i] = analyze_entry(entries[i], max_degree);
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    std::sort(results.begin(), results.end(),
              [](const CorpusResult& a, const CorpusResult& b) { return a.entry.id < b.entry.id; });
    return results;
}

bool corpus_all_passed(const std::vector<CorpusResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CorpusResult& r) { return r.status == EntryStatus::Pass; });
}

Json corpus_to_json(const std::vector<CorpusResult>& results) {
    Json entries = Json::array();
    std::size_t passed = 0, failed = 0, errors = 0;
    for (const auto& r : results) {
        Json expected = Json::object();
        for (const auto& [k, v] : r.entry.expected) expected[k] = v;
        entries.push_back(Json{{"id", r.entry.id},
                               {"polynomial", r.entry.polynomial},
                               {"status", status_name(r.status)},
                               {"expected", std::move(expected)},
                               {"report", r.report ? to_json(*r.report) : Json(nullptr)},
                               {"failures", r.failures},
                               {"error", r.error.empty() ? Json(nullptr) : Json(r.error)}});
        if (r.status == EntryStatus::Pass) ++passed;
        if (r.status == EntryStatus::Fail) ++failed;
        if (r.status == EntryStatus::Error) ++errors;
    }
    return Json{{"entries", std::move(entries)},
                {"summary", Json{{"total", results.size()}, {"passed", passed}, {"failed", failed}, {"errors", errors}}}};
}

std::string corpus_to_table(const std::vector<CorpusResult>& results) {
    std::size_t id_width = 2;
    for (const auto& r : results) id_width = std::max(id_width, r.entry.id.size());
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(id_width)) << "id" << "  status  " << std::right << std::setw(4)
       << "m" << std::setw(6) << "mu" << std::setw(6) << "tau" << std::setw(10) << "3mu-4tau" << "  branch\n";
    std::size_t passed = 0;
    for (const auto& r : results) {
        os << std::left << std::setw(static_cast<int>(id_width)) << r.entry.id << "  " << std::setw(6)
           << status_name(r.status) << std::right;
        if (r.report) {
            os << std::setw(6) << r.report->multiplicity << std::setw(6) << r.report->milnor << std::setw(6)
               << r.report->tjurina << std::setw(10) << r.report->monotone << "  " << (r.report->is_branch ? "yes" : "no");
        } else {
            os << "  " << r.error;
        }
        os << '\n';
        for (const auto& f : r.failures) os << "    " << f << '\n';
        if (r.status == EntryStatus::Pass) ++passed;
    }
    os << passed << "/" << results.size() << " entries passed\n";
    return os.str();
}

}  // namespace curvegerm
