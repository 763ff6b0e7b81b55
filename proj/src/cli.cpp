// Copyright (c) wheelsep contributors.
// SPDX-License-Identifier: Apache-2.0
#include "wheelsep/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wheelsep/documents.hpp"
#include "wheelsep/error.hpp"
#include "wheelsep/generators.hpp"
#include "wheelsep/pipeline.hpp"

namespace wheelsep::cli {

namespace {

// Raised for bad arguments, unreadable files or malformed documents.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text)) {
        throw UsageError("cannot write " + path);
    }
}

template <class Doc, class Parse>
Doc load(const std::string& path, Parse parse) {
    try {
        return parse(read_file(path));
    } catch (const DocumentError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

std::size_t oracle_cap() {
    const char* raw = std::getenv("WHEELSEP_ORACLE_CAP");
    if (!raw) {
        return kDefaultOracleCap;
    }
    const std::string text(raw);
    if (text.empty() || text.size() > 3 || text.find_first_not_of("0123456789") != std::string::npos ||
        std::stoul(text) > kMaxOracleCap) {
        throw UsageError("WHEELSEP_ORACLE_CAP must be an integer in [0, " + std::to_string(kMaxOracleCap) + "]");
    }
    return std::stoul(text);
}

std::pair<std::uint64_t, std::uint64_t> parse_probability(const std::string& text) {
    try {
        const Rational r = parse_rational(text);
        if (r > 1 || boost::multiprecision::denominator(r) > 1000000000) {
            throw UsageError("--p must be a fraction in [0, 1]");
        }
        return {boost::multiprecision::numerator(r).convert_to<std::uint64_t>(),
                boost::multiprecision::denominator(r).convert_to<std::uint64_t>()};
    } catch (const PreconditionError& e) {
        throw UsageError(std::string("--p: ") + e.what());
    }
}

struct SeparateArgs {
    int ell = 0;
    std::string input;
    std::string output;
    bool fan = false;
};

int do_separate(const SeparateArgs& a, std::ostream& out) {
    const auto doc = load<GraphDocument>(a.input, parse_graph_document);
    const Weighting w = doc.effective_weights();
    if (a.ell < (a.fan ? 2 : 3)) {
        throw UsageError("--ell must be at least " + std::string(a.fan ? "2" : "3"));
    }
    ResultDocument result;
    result.ell = a.ell;
    result.excluded = a.fan ? Excluded::Fan : Excluded::Wheel;
    result.result = a.fan ? fan_separator(doc.graph, w, a.ell) : separator(doc.graph, w, a.ell);
    emit(a.output, serialize_result_document(result), out);
    return result.result.is_certificate() ? kOk : kWitness;
}

struct VerifyArgs {
    int ell = 0;
    std::string input;
    std::string result;
};

int do_verify(const VerifyArgs& a, std::ostream& out) {
    const auto doc = load<GraphDocument>(a.input, parse_graph_document);
    const auto res = load<ResultDocument>(a.result, parse_result_document);
    auto fail = [&](const std::string& why) {
        out << "FAIL " << why << "\n";
        return kVerifyFailed;
    };
    if (res.ell != a.ell) {
        return fail("result was produced for ell = " + std::to_string(res.ell));
    }
    const bool fan = res.excluded == Excluded::Fan;
    if (res.result.is_certificate()) {
        const auto& cert = res.result.certificate();
        if ((cert.route == Route::FanDominated) != fan && cert.route != Route::Empty) {
            return fail("route " + std::string(route_name(cert.route)) + " does not match the excluded pattern");
        }
        const auto report = verify_certificate(doc.graph, doc.effective_weights(), cert, a.ell);
        out << report.summary();
        return report.passed() ? kOk : kVerifyFailed;
    }
    const auto& witness = res.result.witness();
    if (a.ell < (fan ? 2 : 3)) {
        return fail("ell too small for the pattern");
    }
    const auto size = static_cast<std::size_t>(a.ell);
    if (!(witness.pattern == (fan ? families::fan(size) : families::wheel(size)))) {
        return fail("pattern is not the excluded graph");
    }
    try {
        if (!verify_model(doc.graph, witness)) {
            return fail("model");
        }
    } catch (const PreconditionError& e) {
        return fail(std::string("model: ") + e.what());
    }
    out << "pass model\n";
    return kOk;
}

struct GenArgs {
    std::string kind;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t k = 0;
    std::size_t ell = 4;
    std::string p = "1/3";
    std::uint64_t seed = 0;
    std::uint64_t max_den = 0;
    bool fan = false;
    std::string output;
};

int do_gen(const GenArgs& a, std::ostream& out) {
    GraphDocument doc;
    try {
        if (a.kind == "sp") {
            doc.graph = gen_series_parallel(a.n, a.seed);
        } else if (a.kind == "filtered") {
            const auto [num, den] = parse_probability(a.p);
            doc.graph = gen_oracle_filtered(a.n, a.ell, num, den, a.seed, a.fan ? Excluded::Fan : Excluded::Wheel,
                                            oracle_cap());
        } else {
            const Cobweb cw = gen_cobweb(a.m, a.k, a.seed);
            doc.graph = cw.graph;
            doc.cycle = cw.cycle;
        }
        if (a.max_den > 0) {
            doc.weights = gen_weighting(doc.graph, a.seed, a.max_den);
        }
    } catch (const PreconditionError& e) {
        throw UsageError(e.what());
    }
    emit(a.output, serialize_graph_document(doc), out);
    return kOk;
}

struct DotArgs {
    std::string input;
    std::string highlight;
    std::string output;
};

int do_dot(const DotArgs& a, std::ostream& out) {
    const auto doc = load<GraphDocument>(a.input, parse_graph_document);
    std::optional<ResultDocument> res;
    if (!a.highlight.empty()) {
        res = load<ResultDocument>(a.highlight, parse_result_document);
    }
    emit(a.output, to_dot(doc.graph, res ? &*res : nullptr), out);
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certified balanced separators for wheel-free and fan-free graphs", "wheelsep"};
    app.require_subcommand(1);

    SeparateArgs sep;
    auto* separate = app.add_subcommand("separate", "compute a certified separator or a witness");
    separate->add_option("--ell", sep.ell, "size of the excluded wheel (or fan)")->required();
    separate->add_option("--input", sep.input, "graph document")->required();
    separate->add_option("--output", sep.output, "result document (default: stdout)");
    separate->add_flag("--fan", sep.fan, "exclude the fan F_ell instead of the wheel W_ell");

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "re-check a result document against a graph");
    verify->add_option("--ell", ver.ell, "size of the excluded pattern")->required();
    verify->add_option("--input", ver.input, "graph document")->required();
    verify->add_option("--result", ver.result, "result document")->required();

    GenArgs gen;
    auto* generate = app.add_subcommand("gen", "write a seeded random graph document");
    generate->add_option("--kind", gen.kind, "sp, filtered or cobweb")
        ->required()
        ->check(CLI::IsMember({"sp", "filtered", "cobweb"}));
    generate->add_option("--n", gen.n, "number of vertices (sp, filtered)");
    generate->add_option("--m", gen.m, "cycle length (cobweb)");
    generate->add_option("--k", gen.k, "outside vertices (cobweb)");
    generate->add_option("--ell", gen.ell, "excluded pattern size (filtered)");
    generate->add_option("--p", gen.p, "edge probability NUM/DEN (filtered)");
    generate->add_flag("--fan", gen.fan, "filter out F_ell instead of W_ell");
    generate->add_option("--max-den", gen.max_den, "random p/q weights with q up to this (default: unit weights)");
    generate->add_option("--seed", gen.seed, "64-bit seed")->required();
    generate->add_option("--output", gen.output, "graph document (default: stdout)");

    DotArgs dot;
    auto* export_dot = app.add_subcommand("export-dot", "write Graphviz text");
    export_dot->add_option("--input", dot.input, "graph document")->required();
    export_dot->add_option("--highlight", dot.highlight, "result document to highlight");
    export_dot->add_option("--output", dot.output, "DOT file (default: stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (separate->parsed()) {
            return do_separate(sep, out);
        }
        if (verify->parsed()) {
            return do_verify(ver, out);
        }
        if (generate->parsed()) {
            return do_gen(gen, out);
        }
        return do_dot(dot, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

} // namespace wheelsep::cli
