#include "curvegerm/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <ostream>

#include "curvegerm/compare.hpp"
#include "curvegerm/corpus.hpp"
#include "curvegerm/errors.hpp"
#include "curvegerm/invariants.hpp"
#include "curvegerm/local_algebra.hpp"
#include "curvegerm/parser.hpp"
#include "curvegerm/render.hpp"

namespace curvegerm {

namespace {

struct Options {
    std::string format = "table";
    unsigned max_degree = kDefaultMaxDegree;
    unsigned jobs = 1;
};

void add_common(CLI::App* cmd, Options& opts) {
    cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--max-degree", opts.max_degree, "Refuse inputs of larger total degree")
        ->check(CLI::PositiveNumber);
}

void emit(std::ostream& out, const Options& opts, const Json& json, const std::string& table) {
    if (opts.format == "json") {
        out << json.dump(2) << '\n';
    } else {
        out << table;
    }
}

// Failures of the per-germ checks that `verify` enforces on a branch.
std::vector<std::string> verification_failures(const InvariantReport& r) {
    CorpusEntry none;
    return entry_failures(none, r);
}

int cmd_analyze(const std::string& text, const Options& opts, std::ostream& out) {
    const InvariantReport report = germ_report(parse_polynomial(text, opts.max_degree));
    emit(out, opts, to_json(report), to_table(report));
    return kExitOk;
}

int cmd_resolve(const std::string& text, const Options& opts, std::ostream& out) {
    const Polynomial f = parse_polynomial(text, opts.max_degree);
    const ResolutionSequence seq = resolve_branch(f);
    const auto chain = theorem_verify(f);
    emit(out, opts, to_json(seq, chain), to_table(seq, chain));
    return kExitOk;
}

int cmd_compare(const std::string& candidate, const std::string& base, const Options& opts, std::ostream& out) {
    const auto verdict =
        not_smoother(parse_polynomial(candidate, opts.max_degree), parse_polynomial(base, opts.max_degree));
    emit(out, opts, to_json(verdict), to_table(verdict));
    return kExitOk;
}

int cmd_verify(const std::string& text, const Options& opts, std::ostream& out) {
    const Polynomial f = parse_polynomial(text, opts.max_degree);
    const InvariantReport report = germ_report(f);
    // Reducible input: rerun the resolution to surface NotABranch with its stage.
    if (!report.is_branch) resolve_branch(f);
    const auto failures = verification_failures(report);
    Json json{{"report", to_json(report)}, {"verified", failures.empty()}, {"failures", failures}};
    std::string table = to_table(report);
    table += failures.empty() ? "verification  PASS\n" : "verification  FAIL\n";
    for (const auto& line : failures) table += "  " + line + "\n";
    emit(out, opts, json, table);
    return failures.empty() ? kExitOk : kExitMismatch;
}

int cmd_corpus(const std::string& path, const Options& opts, std::ostream& out) {
    const auto entries = load_corpus(path, opts.max_degree);
    const auto results = run_corpus(entries, opts.jobs, opts.max_degree);
    emit(out, opts, corpus_to_json(results), corpus_to_table(results));
    return corpus_all_passed(results) ? kExitOk : kExitMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Singularity invariants of plane curve germs over Q", "curvegerm"};
    app.require_subcommand(1);

    Options opts;
    std::string poly, other, path;

    auto* analyze = app.add_subcommand("analyze", "Report m, mu, tau, 3mu-4tau and branch data of a germ");
    analyze->add_option("polynomial", poly, "Germ equation in x, y")->required();
    add_common(analyze, opts);

    auto* resolve = app.add_subcommand("resolve", "Resolve a branch by successive blowups");
    resolve->add_option("polynomial", poly, "Germ equation in x, y")->required();
    add_common(resolve, opts);

    auto* compare = app.add_subcommand("compare", "Test whether CANDIDATE can be smoother than BASE");
    compare->add_option("candidate", poly, "Candidate germ")->required();
    compare->add_option("base", other, "Base germ")->required();
    add_common(compare, opts);

    auto* verify = app.add_subcommand("verify", "Analyze a branch and check the blowup laws along its resolution");
    verify->add_option("polynomial", poly, "Germ equation in x, y")->required();
    add_common(verify, opts);

    auto* corpus = app.add_subcommand("corpus", "Run a corpus file (or a bundled corpus name)");
    corpus->add_option("path", path, "Corpus file")->required();
    corpus->add_option("--jobs", opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
    add_common(corpus, opts);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(poly, opts, out);
        if (resolve->parsed()) return cmd_resolve(poly, opts, out);
        if (compare->parsed()) return cmd_compare(poly, other, opts, out);
        if (verify->parsed()) return cmd_verify(poly, opts, out);
        if (corpus->parsed()) return cmd_corpus(path, opts, out);
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what();
        if (e.stage()) err << " (stage " << *e.stage() << ")";
        err << '\n';
        return kExitDomain;
    }
    return kExitUsage;
}

}  // namespace curvegerm
