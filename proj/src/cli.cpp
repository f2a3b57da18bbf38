#include "ucycle/cli.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <iterator>
#include <optional>
#include <sstream>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ucycle/concat.hpp"
#include "ucycle/families.hpp"
#include "ucycle/text.hpp"
#include "ucycle/verify.hpp"

namespace ucycle {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GenerateArgs {
    std::string scheme;
    unsigned k = 0;
    std::size_t n = 0;
    std::optional<std::size_t> m;
    std::string format = "segmented";
};

struct ListArgs {
    std::string family;
    unsigned k = 0;
    std::size_t n = 0;
    std::string order = "lex";
};

struct VerifyArgs {
    unsigned k = 0;
    std::size_t n = 0;
    std::string file;
    std::optional<std::string> scheme;
    std::optional<std::size_t> m;
    std::string format = "plain";
};

struct ConditionArgs {
    std::vector<std::string> positional;
    std::optional<std::size_t> m;
    std::string cycles;
    bool corollary = false;
};

json words_json(const WordSet& words) {
    json out = json::array();
    for (const Word& w : words) out.push_back(to_string(w));
    return out;
}

json report_json(const VerificationReport& r) {
    json failures = json::array();
    for (const ConditionFailure& f : r.condition_failures) {
        failures.push_back({{"condition", std::string(to_string(f.condition))},
                            {"index", f.index},
                            {"witness", f.witness}});
    }
    return {{"passed", r.passed()},
            {"missing", words_json(r.missing)},
            {"duplicated", words_json(r.duplicated)},
            {"unexpected", words_json(r.unexpected)},
            {"failures", failures}};
}

void print_words(std::ostream& out, std::string_view label, const WordSet& words) {
    if (words.empty()) return;
    out << label << " (" << words.size() << "):";
    for (const Word& w : words) out << ' ' << to_string(w);
    out << '\n';
}

ConstructionSpec make_spec(const std::string& scheme, unsigned k, std::size_t n, std::optional<std::size_t> m) {
    ConstructionSpec spec{parse_scheme(scheme), k, n, m};
    validate(spec);
    return spec;
}

int run_generate(const GenerateArgs& a, const Limits& limits, std::ostream& out) {
    const ConstructionSpec spec = make_spec(a.scheme, a.k, a.n, a.m);
    require_within(limits, spec.k, spec.n);

    if (a.format == "plain") {
        SegmentStream stream(spec, limits);
        const bool tokens = spec.k > 10;
        bool first = true;
        while (auto segment = stream.next()) {
            if (tokens && !first) out << ' ';
            out << to_string(*segment);
            first = false;
        }
        out << '\n';
        return kExitOk;
    }

    const ConstructionResult r = construct(spec, limits);
    if (a.format == "segmented") {
        out << join_segments(r.segments) << '\n';
        return kExitOk;
    }

    json segments = json::array();
    for (const Word& s : r.segments) segments.push_back(to_string(s));
    const bool verified = is_universal_cycle(r.sequence, target_set_of(r.selection, spec.n), spec.n).passed();
    json doc = {{"scheme", std::string(to_string(spec.scheme))},
                {"k", spec.k},
                {"n", spec.n},
                {"m", spec.m ? json(*spec.m) : json(nullptr)},
                {"sequence", to_string(r.sequence)},
                {"segments", segments},
                {"target_set_size", r.target_set_size},
                {"verified", verified}};
    out << doc.dump() << '\n';
    return kExitOk;
}

int run_list(const ListArgs& a, const Limits& limits, std::ostream& out) {
    const FamilyKind kind = parse_family(a.family);
    const OrderKind order = parse_order(a.order);
    if (a.k < 2 || a.n < 1) throw UsageError("list-family needs k >= 2 and n >= 1");
    require_within(limits, a.k, a.n);
    for (const Word& w : sort(family(kind, a.k, a.n, limits), order)) out << to_string(w) << '\n';
    return kExitOk;
}

int run_verify(const VerifyArgs& a, const Limits& limits, std::istream& in, std::ostream& out) {
    if (a.k < 2 || a.n < 1) throw UsageError("verify needs --k >= 2 and --n >= 1");
    if (a.m && !a.scheme) throw UsageError("--partial requires --scheme");

    std::string text;
    if (a.file.empty() || a.file == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        std::ifstream file(a.file, std::ios::binary);
        if (!file) throw UsageError("cannot read '" + a.file + "'");
        text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    const CyclicSequence seq(parse_word(text, a.k));

    VerificationReport report;
    if (a.scheme) {
        const ConstructionSpec spec = make_spec(*a.scheme, a.k, a.n, a.m);
        report = is_universal_cycle(seq, target_set(spec, limits), a.n);
    } else {
        report = is_de_bruijn(seq, a.k, a.n, limits);
    }

    if (a.format == "json") {
        json doc = report_json(report);
        doc["k"] = a.k;
        doc["n"] = a.n;
        doc["length"] = seq.size();
        out << doc.dump() << '\n';
    } else {
        out << (report.passed() ? "PASS" : "FAIL") << ": " << seq.size() << " symbols, k=" << a.k
            << ", n=" << a.n << '\n';
        print_words(out, "missing", report.missing);
        print_words(out, "duplicated", report.duplicated);
        print_words(out, "unexpected", report.unexpected);
        for (const ConditionFailure& f : report.condition_failures) {
            out << to_string(f.condition) << ": " << f.witness << '\n';
        }
    }
    return report.passed() ? kExitOk : kExitFailed;
}

std::size_t parse_count(const std::string& text, const char* what) {
    std::size_t value = 0;
    std::size_t used = 0;
    try {
        value = std::stoul(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty() || text.front() == '-') {
        throw UsageError(std::string(what) + " must be a non-negative integer, got '" + text + "'");
    }
    return value;
}

int run_conditions(const ConditionArgs& a, const Limits& limits, std::ostream& out) {
    Decomposition d;
    if (!a.cycles.empty()) {
        if (a.positional.size() != 2) throw UsageError("with --cycles, give exactly K N");
        if (a.m) throw UsageError("--partial cannot be combined with --cycles");
        const auto k = static_cast<unsigned>(parse_count(a.positional[0], "k"));
        const std::size_t n = parse_count(a.positional[1], "n");
        if (k < 2 || n < 1) throw UsageError("check-conditions needs k >= 2 and n >= 1");
        require_within(limits, k, n);
        d.partition.n = n;
        std::string text;
        for (std::istringstream list(a.cycles); std::getline(list, text, ',');) {
            Word cycle = parse_word(text, k);
            d.partition.sets.push_back(cyclic_substrings(cycle, n));
            d.partition.cycles.push_back(std::move(cycle));
        }
        d.rule = a.corollary ? ConditionRule::Corollary1 : ConditionRule::Theorem1;
    } else {
        if (a.positional.size() != 3) throw UsageError("check-conditions needs SCHEME K N, or --cycles with K N");
        if (a.corollary) throw UsageError("--corollary only applies to --cycles");
        const auto k = static_cast<unsigned>(parse_count(a.positional[1], "k"));
        const std::size_t n = parse_count(a.positional[2], "n");
        const ConstructionSpec spec = make_spec(a.positional[0], k, n, a.m);
        require_within(limits, k, n);
        d = proof_decomposition(spec, limits);
    }

    const VerificationReport report = check_decomposition(d);
    out << "rule: " << (d.rule == ConditionRule::Theorem1 ? "suffix-related" : "prefix-related") << '\n';
    out << "cycles: " << d.partition.cycles.size() << '\n';
    for (Condition c : {Condition::Partition, Condition::EndLength, Condition::LongestRun, Condition::Related}) {
        out << to_string(c) << ": ";
        const auto it = std::find_if(report.condition_failures.begin(), report.condition_failures.end(),
                                     [c](const ConditionFailure& f) { return f.condition == c; });
        if (it == report.condition_failures.end()) {
            out << "pass\n";
        } else {
            out << "FAIL at " << it->index << ": " << it->witness << '\n';
        }
    }
    const bool disjoint = !report.failed(Condition::Partition);
    out << "conclusion: "
        << (!disjoint ? "not evaluated" : conclusion_holds(d) ? "holds" : "does not hold") << '\n';
    return report.passed() ? kExitOk : kExitFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Universal cycles by concatenating necklace-like strings", "ucycle"};
    app.require_subcommand(1);
    app.fallthrough();
    std::uint64_t cap = Limits{}.max_windows;
    app.add_option("--cap", cap, "Largest k^n any command may touch")->capture_default_str();

    const std::vector<std::string> formats = {"plain", "segmented", "json"};

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Print the universal cycle of a construction");
    generate->add_option("scheme", gen.scheme, "lex-neck, colex-neck, revlex-rneck, revcolex-con or lex-con")
        ->required();
    generate->add_option("k", gen.k, "Alphabet size")->required();
    generate->add_option("n", gen.n, "Window length")->required();
    generate->add_option("--partial,-m", gen.m, "Use m strings from the anchored end of the listing");
    generate->add_option("--format", gen.format)->check(CLI::IsMember(formats))->capture_default_str();

    ListArgs list;
    auto* list_family = app.add_subcommand("list-family", "List a string family in a given order");
    list_family->add_option("family", list.family, "neck, r, con or c")->required();
    list_family->add_option("k", list.k, "Alphabet size")->required();
    list_family->add_option("n", list.n, "Word length (half length for con and c)")->required();
    list_family->add_option("--order", list.order)
        ->check(CLI::IsMember({"lex", "revlex", "colex", "revcolex"}))
        ->capture_default_str();

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "Check a sequence read from stdin or --file");
    verify->add_option("--k", ver.k, "Alphabet size")->required();
    verify->add_option("--n", ver.n, "Window length")->required();
    verify->add_option("--file", ver.file, "Read the sequence from this file instead of stdin");
    verify->add_option("--scheme", ver.scheme, "Check against the target set of this construction");
    verify->add_option("--partial,-m", ver.m, "Partial count for --scheme");
    verify->add_option("--format", ver.format)->check(CLI::IsMember({"plain", "json"}))->capture_default_str();

    ConditionArgs cond;
    auto* conditions = app.add_subcommand("check-conditions", "Evaluate the concatenation conditions");
    conditions->add_option("args", cond.positional, "SCHEME K N, or K N with --cycles");
    conditions->add_option("--partial,-m", cond.m, "Partial count");
    conditions->add_option("--cycles", cond.cycles, "Comma-separated cycles to concatenate")->expected(1);
    conditions->add_flag("--corollary", cond.corollary, "Use the last-symbol, prefix-related form");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const Limits limits{cap};
    try {
        if (*generate) return run_generate(gen, limits, out);
        if (*list_family) return run_list(list, limits, out);
        if (*verify) return run_verify(ver, limits, in, out);
        return run_conditions(cond, limits, out);
    } catch (const ParseError& e) {
        err << "error: parse error at byte " << e.offset() << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what() << " (raise it with --cap)\n";
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace ucycle
