#include <doctest.h>

#include "oracles.hpp"
#include "wheelsep/error.hpp"
#include "wheelsep/minor_oracle.hpp"

using namespace wheelsep;

namespace {

InducedMinorWitness identity_model(const Graph& g) {
    InducedMinorWitness w{g, {}};
    for (VertexId v : g.vertices()) {
        w.branch_sets[v] = {v};
    }
    return w;
}

} // namespace

TEST_SUITE("minor_oracle") {

TEST_CASE("verify_model") {
    const Graph w5 = families::wheel(5);
    CHECK(verify_model(w5, identity_model(w5)));

    InducedMinorWitness shared{families::path(2), {{0, {0, 1}}, {1, {1, 2}}}};
    CHECK_FALSE(verify_model(families::path(3), shared));

    const Graph c6 = families::cycle(6);
    InducedMinorWitness tri{families::cycle(3), {{0, {0, 1}}, {1, {2, 3}}, {2, {4, 5}}}};
    CHECK(verify_model(c6, tri));
    CHECK(oracle::model_by_definition(c6, tri.pattern, tri.branch_sets));

    InducedMinorWitness unknown{families::path(1), {{0, {42}}}};
    CHECK_THROWS_AS(verify_model(c6, unknown), PreconditionError);
}

TEST_CASE("find_induced_minor") {
    const Graph w4 = families::wheel(4);
    const auto self = find_induced_minor(w4, w4);
    REQUIRE(self.has_value());
    CHECK(verify_model(w4, *self));

    CHECK_FALSE(find_induced_minor(families::cycle(6), w4).has_value());
    CHECK_FALSE(oracle::definition_induced_minor(families::cycle(6), w4));

    CHECK_THROWS_AS(find_induced_minor(families::path(13), families::path(2)), PreconditionError);
    CHECK(find_induced_minor(families::path(13), families::path(2), 13).has_value());
}

TEST_CASE("find_induced_minor agrees with the definition on small hosts") {
    const Graph c4 = families::cycle(4);
    for (std::uint64_t mask = 0; mask < (1u << oracle::pair_count(5)); ++mask) {
        const Graph g = oracle::graph_from_mask(5, mask);
        const auto found = find_induced_minor(g, c4);
        CHECK(found.has_value() == oracle::definition_induced_minor(g, c4));
        if (found) {
            CHECK(oracle::model_by_definition(g, c4, found->branch_sets));
        }
    }
}

TEST_CASE("wheel witness from a component") {
    const Graph w5 = families::wheel(5);
    const auto hub = wheel_witness_from_component(w5, {1, 2, 3, 4, 5}, {0}, 5);
    CHECK(verify_model(w5, hub));
    CHECK(hub.branch_sets.at(0) == VertexSet{0});

    // C6 on 0..5 plus x = 6 adjacent to 0, 1, 3, 4.
    const Graph g({0, 1, 2, 3, 4, 5, 6},
                  {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {6, 0}, {6, 1}, {6, 3}, {6, 4}});
    const auto wit = wheel_witness_from_component(g, {0, 1, 2, 3, 4, 5}, {6}, 4);
    CHECK(verify_model(g, wit));
    CHECK(wit.branch_sets.at(0) == VertexSet{6});
    CHECK(wit.pattern == families::wheel(4));

    CHECK_THROWS_AS(wheel_witness_from_component(g, {0, 1, 2, 3, 4, 5}, {6}, 5), PreconditionError);
}

TEST_CASE("fan witness") {
    const Graph f3 = families::fan(3);
    CHECK(verify_model(f3, fan_witness(f3, {1, 2, 3}, {0}, 3)));

    // P5 on 0..4 plus 5 adjacent to 0, 2, 4.
    const Graph g({0, 1, 2, 3, 4, 5}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 0}, {5, 2}, {5, 4}});
    const auto wit = fan_witness(g, {0, 1, 2, 3, 4}, {5}, 3);
    CHECK(verify_model(g, wit));
    CHECK(wit.pattern == families::fan(3));

    const Graph one({0, 1, 2, 3}, {{0, 1}, {1, 2}, {3, 1}});
    CHECK_THROWS_AS(fan_witness(one, {0, 1, 2}, {3}, 2), PreconditionError);
}

TEST_CASE("K4 minors") {
    CHECK_FALSE(k4_minor_free(families::complete(4)));
    CHECK(k4_minor_free(families::star(5)));
    CHECK(k4_minor_free(families::path(7)));
    Graph c6chord({0, 1, 2, 3, 4, 5}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}});
    CHECK(k4_minor_free(c6chord));
    CHECK_FALSE(k4_minor_free(families::wheel(5)));
    CHECK_FALSE(k4_minor_free(families::grid(3, 3)));

    const auto red = series_parallel_reduction(c6chord);
    CHECK(red.core.empty());
    CHECK(red.steps.size() == 6);

    for (const Graph& g : {families::complete(4), families::wheel(6), families::grid(3, 4), families::complete(6)}) {
        const auto wit = k4_witness(g);
        CHECK(verify_model(g, wit));
        CHECK(wit.pattern == families::wheel(3));
    }
    CHECK_THROWS_AS(k4_witness(families::cycle(5)), PreconditionError);
}

TEST_CASE("lifting through a contraction") {
    // W4 with the rim vertex 1 replaced by the path 1-5.
    const Graph g({0, 1, 2, 3, 4, 5}, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {5, 2}, {3, 4}, {2, 3}, {4, 1}});
    const auto cm = contract_components(g, {0, 2, 3, 4});
    const auto found = find_induced_minor(cm.image, families::wheel(4));
    REQUIRE(found.has_value());
    CHECK(verify_model(g, lift_witness(*found, cm)));
}

} // TEST_SUITE
