#include <doctest.h>

#include "oracles.hpp"
#include "wheelsep/error.hpp"
#include "wheelsep/generators.hpp"
#include "wheelsep/pipeline.hpp"

using namespace wheelsep;

namespace {

bool arm_verifies(const Graph& g, const Weighting& w, const PipelineResult& r, int ell) {
    if (r.is_certificate()) {
        return verify_certificate(g, w, r.certificate(), ell).passed() &&
               oracle::balanced(g, w, r.certificate().separator);
    }
    return verify_model(g, r.witness()) && oracle::model_by_definition(g, r.witness().pattern, r.witness().branch_sets);
}

} // namespace

TEST_SUITE("pipeline") {

TEST_CASE("tree balanced vertex") {
    const Graph k1({4}, {});
    CHECK(tree_balanced_vertex(k1, Weighting::uniform(k1)) == 4);
    const Graph p3 = families::path(3);
    CHECK(tree_balanced_vertex(p3, Weighting::uniform(p3)) == 1);
    const Graph star = families::star(4);
    CHECK(tree_balanced_vertex(star, Weighting::uniform(star)) == 0);
    CHECK_THROWS_AS(tree_balanced_vertex(families::cycle(4), Weighting::uniform(families::cycle(4))),
                    PreconditionError);
}

TEST_CASE("width-2 route") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph t = gen_series_parallel(3 + seed % 10, seed);
        const auto td = tw2_decomposition(t);
        CHECK(is_tree_decomposition(t, td));
        CHECK(td.width() <= 2);
        const auto s = tw2_separator(t, Weighting::uniform(t));
        CHECK(s.size() <= 3);
        CHECK(oracle::balanced(t, Weighting::uniform(t), s));
    }
    const Graph tree = families::star(5);
    const auto ts = tw2_separator(tree, Weighting::uniform(tree));
    CHECK(ts.size() <= 2);
    CHECK(oracle::balanced(tree, Weighting::uniform(tree), ts));

    const Graph c6 = families::cycle(6);
    const auto cs = tw2_separator(c6, Weighting::uniform(c6));
    CHECK(cs.size() <= 3);
    CHECK(oracle::balanced(c6, Weighting::uniform(c6), cs));
    CHECK(oracle::some_balanced_subset(c6, Weighting::uniform(c6), 2));

    CHECK_THROWS_AS(tw2_separator(families::complete(4), Weighting::uniform(families::complete(4))),
                    PreconditionError);
}

TEST_CASE("sibling identification") {
    // C4 on 0..3; 4 and 5 both pendant on cycle vertex 0.
    const Graph g({0, 1, 2, 3, 4, 5}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {5, 0}});
    const Weighting w({{0, Rational(1, 6)}, {1, Rational(1, 6)}, {2, Rational(1, 6)}, {3, Rational(1, 6)},
                       {4, Rational(1, 6)}, {5, Rational(1, 6)}});
    const auto r = identify_siblings(g, w, {0, 1, 2, 3});
    REQUIRE(r.log.size() == 1);
    CHECK(r.log[0].removed == 4);
    CHECK(r.log[0].into == 5);
    CHECK(r.weights.at(5) == Rational(1, 3));
    CHECK_FALSE(r.graph.contains(4));
    CHECK_FALSE(r.heavy_vertex.has_value());

    // No nested pairs: nothing changes.
    const Graph apart({0, 1, 2, 3, 4, 5}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 2}, {5, 1}, {5, 3}});
    const auto same = identify_siblings(apart, normalize(Weighting::uniform(apart)), {0, 1, 2, 3});
    CHECK(same.log.empty());
    CHECK(same.graph == apart);

    // Merge reaching 3/5 stops with a heavy vertex whose neighbourhood is balanced.
    const Weighting heavy({{0, 0}, {1, Rational(1, 5)}, {2, Rational(1, 5)}, {3, 0}, {4, Rational(3, 10)},
                           {5, Rational(3, 10)}});
    const auto h = identify_siblings(g, heavy, {0, 1, 2, 3});
    REQUIRE(h.heavy_vertex.has_value());
    CHECK(h.weights.at(*h.heavy_vertex) == Rational(3, 5));
    CHECK(oracle::balanced(g, heavy, open_neighborhood(g, {4, 5})));
}

TEST_CASE("extension by a tree vertex") {
    // x = {0} on the path 0-1-2-3: the heavy component is the path 1-2-3.
    const Graph p4 = families::path(4);
    const Weighting w = normalize(Weighting::uniform(p4));
    CHECK(extend_by_tree_vertex(p4, w, {0}, {0, 1, 2, 3}) == VertexSet{0, 2});

    const Graph p2 = families::path(2);
    const Weighting w2({{0, Rational(1, 4)}, {1, Rational(3, 4)}});
    CHECK(extend_by_tree_vertex(p2, w2, {0}, {0, 1}) == VertexSet{0, 1});

    // Pendant off-cycle vertex 4 at cycle vertex 1 carries the balance point.
    const Graph g({0, 1, 2, 3, 4}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}});
    const Weighting wp({{0, Rational(1, 4)}, {1, Rational(1, 8)}, {2, 0}, {3, Rational(1, 8)}, {4, Rational(1, 2)}});
    const auto ext = extend_by_tree_vertex(g, wp, {0, 2}, {0, 1, 2, 3});
    CHECK(ext.count(1));
    CHECK_FALSE(ext.count(4));
    CHECK(oracle::balanced(g, wp, ext));
}

TEST_CASE("cycle separator without big components") {
    const Graph g({0, 1, 2, 3, 4}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 2}});
    const Weighting w = normalize(Weighting::uniform(g));
    const auto r = no_big_components(g, w, {0, 1, 2, 3}, 4);
    REQUIRE(r.is_certificate());
    CHECK(is_subset(r.certificate().separator, {0, 1, 2, 3}));
    CHECK(r.certificate().separator.size() <= 9);
    CHECK(arm_verifies(g, w, r, 4));

    const Graph c4 = families::cycle(4);
    const auto bare = no_big_components(c4, normalize(Weighting::uniform(c4)), {0, 1, 2, 3}, 4);
    REQUIRE(bare.is_certificate());
    CHECK(bare.certificate().separator.size() <= 2);

    // An outside vertex seeing four cycle vertices: W4 from the star arm.
    const Graph c6x({0, 1, 2, 3, 4, 5, 6},
                    {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {6, 0}, {6, 1}, {6, 3}, {6, 4}});
    const auto wit = no_big_components(c6x, normalize(Weighting::uniform(c6x)), {0, 1, 2, 3, 4, 5}, 4);
    REQUIRE_FALSE(wit.is_certificate());
    CHECK(verify_model(c6x, wit.witness()));
}

TEST_CASE("separator") {
    const Graph k5 = families::complete(5);
    const auto empty = separator(k5, Weighting::uniform(k5, 0), 4);
    REQUIRE(empty.is_certificate());
    CHECK(empty.certificate().route == Route::Empty);

    const Graph c8 = families::cycle(8);
    const auto c8r = separator(c8, Weighting::uniform(c8), 4);
    REQUIRE(c8r.is_certificate());
    CHECK(arm_verifies(c8, Weighting::uniform(c8), c8r, 4));

    const Graph w4 = families::wheel(4);
    CHECK(arm_verifies(w4, Weighting::uniform(w4), separator(w4, Weighting::uniform(w4), 4), 4));

    const auto k4 = separator(families::complete(6), Weighting::uniform(families::complete(6)), 3);
    CHECK(arm_verifies(families::complete(6), Weighting::uniform(families::complete(6)), k4, 3));

    CHECK_THROWS_AS(separator(c8, Weighting::uniform(c8), 2), PreconditionError);
}

TEST_CASE("separator on random graphs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Graph g = gen_random_connected(5 + seed % 6, 1, 3, seed);
        const Weighting w = gen_weighting(g, seed, 4);
        for (int ell = 3; ell <= 5; ++ell) {
            CHECK(arm_verifies(g, w, separator(g, w, ell), ell));
        }
    }
}

TEST_CASE("fan separator") {
    const Graph k1({0}, {});
    const auto one = fan_separator(k1, Weighting::uniform(k1), 2);
    REQUIRE(one.is_certificate());
    CHECK(one.certificate().route == Route::FanDominated);
    CHECK(one.certificate().dominators == VertexSet{0});

    const Graph p6 = families::path(6);
    const auto p6r = fan_separator(p6, Weighting::uniform(p6), 2);
    REQUIRE(p6r.is_certificate());
    CHECK(p6r.certificate().dominators->size() <= 2);
    CHECK(arm_verifies(p6, Weighting::uniform(p6), p6r, 2));

    // Sparse random graphs with random weights eventually reach the F3 witness arm.
    bool witnessed = false;
    for (std::uint64_t seed = 0; seed < 500 && !witnessed; ++seed) {
        SplitMix64 rng(seed);
        const std::size_t n = 5 + rng.below(8);
        const std::uint64_t den = 2 + rng.below(6);
        const Graph g = gen_random_connected(n, 1, den, seed);
        const Weighting w = gen_weighting(g, seed * 7 + 1, 1 + rng.below(8));
        const auto r = fan_separator(g, w, 3);
        CHECK(arm_verifies(g, w, r, 3));
        witnessed = !r.is_certificate();
    }
    CHECK(witnessed);
    const Graph w5 = families::wheel(5);
    const Weighting rim({{0, 0}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}});
    const auto fw = fan_separator(w5, rim, 3);
    CHECK(arm_verifies(w5, rim, fw, 3));
}

} // TEST_SUITE
