// Copyright (c) wheelsep contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <vector>

#include "wheelsep/graph.hpp"

namespace wheelsep {

// Induced cycle plus a non-empty independent set of outside vertices, minimum
// degree 2 and no nested outside neighbourhoods.
struct Cobweb {
    Graph graph;
    VertexSequence cycle;
    VertexSet independent;
};

// Each failed invariant raises PreconditionError with its own message:
// "cycle not induced", "independent set must be V - C", "independent set
// empty", "independent set has an edge", "minimum degree", "nested
// neighbourhoods".
Cobweb validate_cobweb(const Graph& g, const VertexSequence& cycle, const VertexSet& independent);

// Anchor plus an arc of the cycle between two consecutive neighbours of the
// anchor. The arc starts at its lesser-id endpoint.
struct Wedge {
    VertexId anchor = 0;
    VertexSequence arc;
    friend bool operator==(const Wedge&, const Wedge&) = default;
};

bool is_trivial(const Wedge& w);
bool is_co_trivial(const Cobweb& cw, const Wedge& w);
VertexSet arc_vertices(const Wedge& w);
// Arc edges as (min, max) pairs.
std::set<Graph::Edge> arc_edges(const Wedge& w);

// deg(v) wedges, in rotation order starting from the least-id neighbour.
std::vector<Wedge> wedges_anchored(const Cobweb& cw, VertexId v);

// Arc endpoints plus internal arc vertices sharing an I-neighbour with a
// cycle vertex off the arc; just the endpoints for a co-trivial wedge.
VertexSet barrier(const Cobweb& cw, const Wedge& w);

// N(u) ⊆ V(W). u must be in I and differ from the anchor.
bool attaches(const Cobweb& cw, VertexId u, const Wedge& w);

// Reachability check that the barrier separates u from the arc. u must not
// attach to w (the anchor itself is allowed).
bool barrier_separates(const Cobweb& cw, const Wedge& w, VertexId u);

using WedgeSelection = std::map<VertexId, Wedge>;

// Arc of u is a proper subgraph of the arc of v.
bool improves(const WedgeSelection& sel, VertexId u, VertexId v);

VertexSet good_vertices(const WedgeSelection& sel);

// Components of the intersection graph of the selected arcs (shared vertices
// and shared edges), each as a path starting at its lesser-id endpoint,
// ordered by first vertex.
std::vector<VertexSequence> intersection_components(const Cobweb& cw, const WedgeSelection& sel,
                                                    const VertexSet& t);

// Keys are non-empty sets of at most three good vertices.
using SegmentSelection = std::map<VertexSet, VertexSequence>;

struct SeparatingPair {
    VertexId u = 0;
    VertexId v = 0; // u <= v
    VertexSet separator;
};

// Good pair {u, v} whose segment is inclusion-minimal (ties to the
// lexicographically least pair) with S = barrier(u) ∪ barrier(v). The
// separation of I from the segment is checked before returning.
SeparatingPair separating_good_pair(const Cobweb& cw, const WedgeSelection& sel, const SegmentSelection& sigma);

} // namespace wheelsep
