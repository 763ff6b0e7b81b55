// Copyright (c) wheelsep contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Independent reference implementations used only by tests. Nothing here
// calls into the library's algorithms beyond the Graph and Weighting value
// types.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wheelsep/graph.hpp"
#include "wheelsep/weights.hpp"

namespace oracle {

using wheelsep::Graph;
using wheelsep::Rational;
using wheelsep::VertexId;
using wheelsep::VertexSet;
using wheelsep::Weighting;

// Components by plain flood fill over an adjacency matrix.
std::vector<VertexSet> flood_components(const Graph& g, const VertexSet& removed);

// No component of g - s weighs more than half of the total (exact).
bool balanced(const Graph& g, const Weighting& w, const VertexSet& s);

// Some subset of V(g) with at most k vertices is balanced.
bool some_balanced_subset(const Graph& g, const Weighting& w, std::size_t k);

// Pattern is an induced minor of host, decided from the definition: pick the
// kept vertices, split them into |V(pattern)| connected blocks, compare the
// quotient against every relabelling of the pattern. Hosts up to ~8 vertices.
bool definition_induced_minor(const Graph& host, const Graph& pattern);

// Same quotient test for K4 as an ordinary minor: deletions of edges are
// irrelevant for complete patterns, so it agrees with the induced version.
bool definition_k4_minor(const Graph& host);

// Labelled graph on vertices 0..n-1 from a bitmask over the pairs (i < j) in
// lexicographic order.
Graph graph_from_mask(std::size_t n, std::uint64_t mask);
std::size_t pair_count(std::size_t n);

// Accepts the Graphviz DOT language (graphs, digraphs, subgraphs, attribute
// statements, ports, quoted/HTML/numeral ids). Fills `error` on rejection.
bool dot_grammar_ok(const std::string& text, std::string* error = nullptr);

// Disjointness, connectivity and edge-iff checked directly on the host.
bool model_by_definition(const Graph& host, const Graph& pattern,
                         const std::map<VertexId, VertexSet>& branch_sets);

} // namespace oracle
