// Copyright (c) wheelsep contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "wheelsep/graph.hpp"

namespace wheelsep {

// Induced-minor model of `pattern`: pairwise disjoint, connected branch sets
// with a host edge between two of them exactly when the pattern vertices are
// adjacent.
struct InducedMinorWitness {
    Graph pattern;
    std::map<VertexId, VertexSet> branch_sets;

    friend bool operator==(const InducedMinorWitness&, const InducedMinorWitness&) = default;
};

inline constexpr std::size_t kDefaultOracleCap = 12;
// Hard limit of the bitmask search, regardless of the configured cap.
inline constexpr std::size_t kMaxOracleCap = 24;

// Checks disjointness, connectivity and the edge-iff condition. Every pattern
// vertex needs a non-empty branch set. Throws PreconditionError when a branch
// set names a vertex outside the host.
bool verify_model(const Graph& host, const InducedMinorWitness& witness);

// Exhaustive backtracking over connected branch sets, pattern vertices taken
// in increasing degree order and candidate sets in increasing order of their
// least vertex. nullopt is a proof of absence. Throws PreconditionError("host
// too large for exhaustive oracle") above the cap.
std::optional<InducedMinorWitness> find_induced_minor(const Graph& host, const Graph& pattern,
                                                      std::size_t cap = kDefaultOracleCap);

// W_ell model in g built from an induced cycle `cycle` and a component
// `component` of g - V(cycle) with at least ell neighbours on the cycle. The
// hub is the component; the rim is cut into arcs that each start at one of ell
// consecutive neighbours, beginning at the least-id neighbour.
InducedMinorWitness wheel_witness_from_component(const Graph& g, const VertexSequence& cycle,
                                                 const VertexSet& component, std::size_t ell);

// F_ell model in g from an induced path and a connected set `component`,
// disjoint from the path, whose neighbourhood lies on the path and has at
// least ell >= 2 vertices.
InducedMinorWitness fan_witness(const Graph& g, const VertexSequence& path, const VertexSet& component,
                                std::size_t ell);

// -- K4 minors ------------------------------------------------------------------

// One elimination of the series-parallel reduction: the vertex and its (at
// most two) neighbours at the moment it was removed.
struct ReductionStep {
    VertexId vertex;
    std::vector<VertexId> neighbors;
};

// Full run of the reduction. `core` holds what could not be reduced (minimum
// degree 3, empty iff g has no K4 minor), with `fibers` mapping each core
// vertex to the connected set of g it absorbed through suppressions.
struct SeriesParallelReduction {
    std::vector<ReductionStep> steps;
    Graph core;
    std::map<VertexId, VertexSet> fibers;
};

// Repeatedly removes the least-id vertex of degree <= 2. Degree-2 vertices
// are suppressed into their lesser neighbour unless the neighbours are
// already adjacent, in which case the vertex is just deleted.
SeriesParallelReduction series_parallel_reduction(const Graph& g);

bool k4_minor_free(const Graph& g);

// W_3 (= K4) model for a graph with a K4 minor, at any size: reduce, then
// greedily delete and contract inside the core while a K4 minor survives.
// Throws PreconditionError when g is K4-minor-free.
InducedMinorWitness k4_witness(const Graph& g);

// Pull a model in contraction.image back to contraction.origin by expanding
// every branch set through the fibers.
InducedMinorWitness lift_witness(const InducedMinorWitness& witness, const ContractionMap& contraction);

} // namespace wheelsep
