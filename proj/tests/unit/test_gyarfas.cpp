#include <doctest.h>

#include "oracles.hpp"
#include "wheelsep/error.hpp"
#include "wheelsep/generators.hpp"
#include "wheelsep/gyarfas.hpp"

using namespace wheelsep;

namespace {

bool variant_contract(const Graph& g, const Weighting& w, const CycleOrPair& r) {
    if (const auto* c = std::get_if<CycleVariant>(&r)) {
        VertexSet dom(c->cycle.begin(), c->cycle.end());
        if (c->p) {
            dom.insert(*c->p);
        }
        return c->cycle.size() >= 4 && is_induced_cycle(g, c->cycle) &&
               oracle::balanced(g, w, closed_neighborhood(g, dom));
    }
    const auto& p = std::get<PairVariant>(r);
    return oracle::balanced(g, w, closed_neighborhood(g, {p.p, p.q}));
}

} // namespace

TEST_SUITE("gyarfas") {

TEST_CASE("growth on small graphs") {
    const Graph k1({7}, {});
    CHECK(gyarfas_path(k1, Weighting::uniform(k1)) == VertexSequence{7});

    const Graph p5 = families::path(5);
    const auto trace = gyarfas_growth(p5, Weighting::uniform(p5));
    CHECK(trace.path == VertexSequence{0, 1});
    REQUIRE(trace.heavy.size() == 1);
    CHECK(trace.heavy[0] == VertexSet{2, 3, 4});
    CHECK(oracle::balanced(p5, Weighting::uniform(p5), {0, 1, 2}));

    // Remainder of C6 after N[v1] has weight exactly 1/2, which is not heavy.
    const Graph c6 = families::cycle(6);
    CHECK(gyarfas_path(c6, Weighting::uniform(c6)) == VertexSequence{0});
}

TEST_CASE("growth preconditions") {
    const Graph two({0, 1}, {});
    CHECK_THROWS_AS(gyarfas_path(two, Weighting::uniform(two)), PreconditionError);
    const Graph p2 = families::path(2);
    CHECK_THROWS_AS(gyarfas_path(p2, Weighting::uniform(p2, 0)), PreconditionError);
}

TEST_CASE("thin separator") {
    const Graph p5 = families::path(5);
    const Weighting w = Weighting::uniform(p5);
    CHECK_THROWS_AS(thin_separator(p5, w, {1, 2}, {}, {1, 2}), PreconditionError);
    CHECK_THROWS_AS(thin_separator(p5, w, {0}, {}, {1}), PreconditionError);

    // y = x with z not balanced: the output contains y and stays balanced.
    const VertexSet x{0, 2};
    const auto out = thin_separator(p5, w, x, x, {0});
    CHECK(is_subset(x, out));
    CHECK(oracle::balanced(p5, w, out));
}

TEST_CASE("thin separator on random inputs") {
    int exercised = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        SplitMix64 rng(seed);
        const std::size_t n = 4 + rng.below(6);
        const Graph g = gen_random_connected(n, 2, 5, seed);
        const Weighting w = gen_weighting(g, seed, 6);
        VertexSet x;
        VertexSet y;
        VertexSet z;
        for (VertexId v : g.vertices()) {
            if (rng.chance(1, 2)) {
                x.insert(v);
                if (rng.chance(1, 2)) {
                    z.insert(v);
                }
            }
            if (rng.chance(1, 3)) {
                y.insert(v);
            }
        }
        if (!oracle::balanced(g, w, set_union(x, y)) || oracle::balanced(g, w, z)) {
            continue;
        }
        ++exercised;
        CHECK(oracle::balanced(g, w, thin_separator(g, w, x, y, z)));
    }
    CHECK(exercised > 20);
}

TEST_CASE("minimal window") {
    const Graph p6 = families::path(6);
    CHECK_THROWS_AS(minimal_window(p6, {0, 1, 2, 3, 4, 5}, {}), PreconditionError);
    const Graph g({0, 1, 2, 3, 4, 5}, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {5, 2}, {5, 3}});
    CHECK(minimal_window(g, {0, 1, 2, 3}, {4, 5}) == Window{0, 2});
    CHECK_THROWS_AS(minimal_window(g, {0, 1}, {5}), PreconditionError);
}

TEST_CASE("cycle plus vertex") {
    const Graph k1({3}, {});
    const auto single = cycle_plus_vertex(k1, Weighting::uniform(k1));
    REQUIRE(std::holds_alternative<PairVariant>(single));
    CHECK(std::get<PairVariant>(single).p == 3);
    CHECK(std::get<PairVariant>(single).q == 3);

    const Graph p5 = families::path(5);
    const auto pair = cycle_plus_vertex(p5, Weighting::uniform(p5));
    REQUIRE(std::holds_alternative<PairVariant>(pair));
    CHECK(std::get<PairVariant>(pair).p == 1);
    CHECK(std::get<PairVariant>(pair).q == 0);
    CHECK(dominating_vertices(pair) == VertexSet{0, 1});

    const Graph grid = families::grid(3, 3);
    CHECK(variant_contract(grid, Weighting::uniform(grid), cycle_plus_vertex(grid, Weighting::uniform(grid))));

    // Growing along C10 forces the cycle through the last path vertex.
    const Graph c10 = families::cycle(10);
    const auto cyc = cycle_plus_vertex(c10, Weighting::uniform(c10));
    CHECK(variant_contract(c10, Weighting::uniform(c10), cyc));
}

TEST_CASE("cycle plus vertex on random graphs") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const Graph g = gen_random_connected(6 + seed % 8, 1, 4, seed);
        const Weighting w = gen_weighting(g, seed + 1, 5);
        const auto path = gyarfas_path(g, w);
        CHECK(is_induced_path(g, path));
        CHECK(oracle::balanced(g, w, closed_neighborhood(g, {path.begin(), path.end()})));
        CHECK(variant_contract(g, w, cycle_plus_vertex(g, w)));
    }
}

} // TEST_SUITE
