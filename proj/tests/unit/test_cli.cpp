#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "wheelsep/cli.hpp"
#include "wheelsep/documents.hpp"

using namespace wheelsep;
namespace fs = std::filesystem;

namespace {

struct Scratch {
    fs::path dir;
    Scratch() {
        dir = fs::temp_directory_path() / ("wheelsep_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }
    std::string file(const std::string& name) const { return (dir / name).string(); }
};

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int call(const std::vector<std::string>& args, std::string* out_text = nullptr) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    if (out_text) {
        *out_text = out.str();
    }
    return code;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("graph document round trip") {
    GraphDocument doc{families::cycle(5), Weighting({{0, Rational(1, 2)}, {1, 0}, {2, 3}, {3, Rational(7, 9)}, {4, 1}}),
                      VertexSequence{0, 1, 2, 3, 4}};
    CHECK(parse_graph_document(serialize_graph_document(doc)) == doc);
    GraphDocument bare{families::path(3), std::nullopt, std::nullopt};
    CHECK(parse_graph_document(serialize_graph_document(bare)) == bare);
    CHECK(bare.effective_weights() == Weighting::uniform(bare.graph));

    CHECK_THROWS_AS(parse_graph_document("{"), DocumentError);
    CHECK_THROWS_AS(parse_graph_document(R"({"vertices":[0,0],"edges":[]})"), DocumentError);
    CHECK_THROWS_AS(parse_graph_document(R"({"vertices":[0,1],"edges":[[0,2]]})"), DocumentError);
    CHECK_THROWS_AS(parse_graph_document(R"({"vertices":[0],"edges":[],"weights":{"0":"2/4"}})"), DocumentError);
    CHECK_THROWS_AS(parse_graph_document(R"({"vertices":[0,1],"edges":[],"weights":{"0":"1/2"}})"), DocumentError);
}

TEST_CASE("result document round trip") {
    ResultDocument cert{4, Excluded::Wheel,
                        PipelineResult{SeparatorCertificate{{1, 2}, Route::TwoVertices, VertexSet{1, 2}, std::nullopt}}};
    CHECK(parse_result_document(serialize_result_document(cert)) == cert);
    ResultDocument sized{5, Excluded::Wheel,
                         PipelineResult{SeparatorCertificate{{1, 2, 3}, Route::CycleSmall, std::nullopt, 16}}};
    CHECK(parse_result_document(serialize_result_document(sized)) == sized);
    InducedMinorWitness wit{families::wheel(3), {{0, {0}}, {1, {1}}, {2, {2, 5}}, {3, {3}}}};
    ResultDocument witness{3, Excluded::Wheel, PipelineResult{wit}};
    CHECK(parse_result_document(serialize_result_document(witness)) == witness);
    CHECK_THROWS_AS(parse_result_document(R"({"kind":"other"})"), DocumentError);
}

TEST_CASE("DOT export") {
    const Graph c4 = families::cycle(4);
    std::string error;
    CHECK(oracle::dot_grammar_ok(to_dot(c4), &error));
    ResultDocument cert{4, Excluded::Wheel,
                        PipelineResult{SeparatorCertificate{{0, 2}, Route::TwoVertices, VertexSet{0}, std::nullopt}}};
    const auto dot = to_dot(c4, &cert);
    CHECK(oracle::dot_grammar_ok(dot, &error));
    CHECK(dot.find("doublecircle") != std::string::npos);
    CHECK(dot.find("filled") != std::string::npos);

    CHECK_FALSE(oracle::dot_grammar_ok("graph { a -> b }"));
    CHECK_FALSE(oracle::dot_grammar_ok("graph { a -- }"));
}

TEST_CASE("separate and verify") {
    Scratch s;
    const auto c8 = s.file("c8.json");
    write(c8, serialize_graph_document({families::cycle(8), std::nullopt, std::nullopt}));
    const auto cert = s.file("c8.cert.json");
    CHECK(call({"separate", "--ell", "4", "--input", c8, "--output", cert}) == cli::kOk);
    CHECK(call({"verify", "--ell", "4", "--input", c8, "--result", cert}) == cli::kOk);

    // Dropping a separator vertex must fail exactly when balancedness breaks.
    const auto doc = parse_result_document(slurp(cert));
    const auto original = std::get<SeparatorCertificate>(doc.result.value);
    const Graph c8g = families::cycle(8);
    int failures = 0;
    for (VertexId v : original.separator) {
        auto broken = original;
        broken.separator.erase(v);
        auto tampered_doc = doc;
        tampered_doc.result.value = broken;
        const auto tampered = s.file("tampered.json");
        write(tampered, serialize_result_document(tampered_doc));
        const bool still = oracle::balanced(c8g, Weighting::uniform(c8g), broken.separator);
        const int code = call({"verify", "--ell", "4", "--input", c8, "--result", tampered});
        CHECK(code == (still ? cli::kOk : cli::kVerifyFailed));
        failures += code == cli::kVerifyFailed;
    }
    CHECK(failures > 0);

    CHECK(call({"verify", "--ell", "5", "--input", c8, "--result", cert}) == cli::kVerifyFailed);

    const auto w4 = s.file("w4.json");
    write(w4, serialize_graph_document({families::wheel(4), std::nullopt, std::nullopt}));
    const auto res = s.file("w4.res.json");
    const int code = call({"separate", "--ell", "4", "--input", w4, "--output", res});
    CHECK((code == cli::kOk || code == cli::kWitness));
    CHECK(call({"verify", "--ell", "4", "--input", w4, "--result", res}) == cli::kOk);

    const auto fan = s.file("fan.res.json");
    const int fcode = call({"separate", "--ell", "3", "--fan", "--input", w4, "--output", fan});
    CHECK((fcode == cli::kOk || fcode == cli::kWitness));
    CHECK(call({"verify", "--ell", "3", "--input", w4, "--result", fan}) == cli::kOk);
}

TEST_CASE("usage errors") {
    Scratch s;
    CHECK(call({}) == cli::kUsage);
    CHECK(call({"separate", "--ell", "4"}) == cli::kUsage);
    const auto bad = s.file("bad.json");
    write(bad, "{\"vertices\": [0, 1], \"edges\": [[0, 1]");
    CHECK(call({"separate", "--ell", "4", "--input", bad}) == cli::kUsage);
    CHECK(call({"separate", "--ell", "4", "--input", s.file("missing.json")}) == cli::kUsage);
    CHECK(call({"gen", "--kind", "nope", "--seed", "1"}) == cli::kUsage);
}

TEST_CASE("gen is deterministic") {
    std::string a;
    std::string b;
    CHECK(call({"gen", "--kind", "sp", "--n", "12", "--seed", "9"}, &a) == cli::kOk);
    CHECK(call({"gen", "--kind", "sp", "--n", "12", "--seed", "9"}, &b) == cli::kOk);
    CHECK(a == b);
    CHECK(parse_graph_document(a).graph.order() == 12);

    std::string f;
    CHECK(call({"gen", "--kind", "filtered", "--n", "7", "--ell", "4", "--p", "1/3", "--seed", "2"}, &f) ==
          cli::kOk);
    CHECK(parse_graph_document(f).graph.order() == 7);

    std::string c;
    CHECK(call({"gen", "--kind", "cobweb", "--m", "6", "--k", "2", "--seed", "3"}, &c) == cli::kOk);
    const auto cw = parse_graph_document(c);
    REQUIRE(cw.cycle.has_value());
    CHECK(cw.cycle->size() == 6);
}

TEST_CASE("export-dot") {
    Scratch s;
    const auto g = s.file("g.json");
    write(g, serialize_graph_document({families::cycle(8), std::nullopt, std::nullopt}));
    const auto cert = s.file("cert.json");
    REQUIRE(call({"separate", "--ell", "4", "--input", g, "--output", cert}) == cli::kOk);
    std::string dot;
    CHECK(call({"export-dot", "--input", g, "--highlight", cert}, &dot) == cli::kOk);
    std::string error;
    CHECK_MESSAGE(oracle::dot_grammar_ok(dot, &error), error);
}

} // TEST_SUITE
