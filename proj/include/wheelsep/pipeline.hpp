// Copyright (c) wheelsep contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "wheelsep/graph.hpp"
#include "wheelsep/minor_oracle.hpp"
#include "wheelsep/weights.hpp"

namespace wheelsep {

struct TreeDecomposition {
    Graph tree;
    std::map<VertexId, VertexSet> bags; // tree node -> bag

    std::size_t width() const;
};

// Checks the three tree-decomposition conditions against g.
bool is_tree_decomposition(const Graph& g, const TreeDecomposition& td);

// Either arm has been verified against the input before it is returned.
struct PipelineResult {
    std::variant<SeparatorCertificate, InducedMinorWitness> value;

    bool is_certificate() const { return std::holds_alternative<SeparatorCertificate>(value); }
    const SeparatorCertificate& certificate() const { return std::get<SeparatorCertificate>(value); }
    const InducedMinorWitness& witness() const { return std::get<InducedMinorWitness>(value); }
};

// Vertex whose removal leaves no heavy component of the tree t.
VertexId tree_balanced_vertex(const Graph& t, const Weighting& w);

// Width <= 2 decomposition from replaying the series-parallel reduction: node
// i is the i-th eliminated vertex with its neighbours at that time.
TreeDecomposition tw2_decomposition(const Graph& g);

// First balanced bag of tw2_decomposition(g). Throws "graph has K4 minor".
VertexSet tw2_separator(const Graph& g, const Weighting& w);

struct SiblingMerge {
    VertexId removed;
    VertexId into;
};

struct SiblingReduction {
    Graph graph;
    Weighting weights;
    std::vector<SiblingMerge> log;
    // Set when a merged vertex became heavy: its neighbourhood is balanced.
    std::optional<VertexId> heavy_vertex;
};

// Repeatedly removes the least-id u outside `protect` whose neighbourhood is
// inside that of another such vertex v (least id first), moving its weight
// to v. Stops early once a surviving vertex carries more than half the
// weight. The unprotected vertices must be independent; w must be normal.
SiblingReduction identify_siblings(const Graph& g, const Weighting& w, const VertexSet& protect);

// x ∪ {t} for a balanced vertex t of the heavy tree component of g - x,
// moved onto the cycle when it is a pendant off-cycle vertex.
VertexSet extend_by_tree_vertex(const Graph& g, const Weighting& w, const VertexSet& x,
                                const VertexSet& cycle_vertices);

// Balanced separator inside V(c) of size at most (ell-1)^2, or a W_ell model
// wherever a wheel-freeness step fails. Requires a connected g, normal w, an
// induced cycle c of length >= 4 with an independent outside, and outside
// weights at most 1/2.
PipelineResult no_big_components(const Graph& g, const Weighting& w, const VertexSequence& c, int ell);

// Balanced separator dominated by at most ell vertices or of size at most
// (ell-1)^2, or a W_ell model. ell >= 3.
PipelineResult separator(const Graph& g, const Weighting& w, int ell);

// Balanced separator dominated by at most ell vertices, or an F_ell model.
// ell >= 2.
PipelineResult fan_separator(const Graph& g, const Weighting& w, int ell);

} // namespace wheelsep
