// Copyright (c) wheelsep contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "wheelsep/graph.hpp"
#include "wheelsep/weights.hpp"

namespace wheelsep {

// Induced path grown one vertex at a time, together with the heavy
// components it walked through: heavy[i] is the heavy component of
// g - N[p_1..p_{i+1}], so heavy has path.size() - 1 entries, each a strict
// subset of the one before.
struct GrowthTrace {
    VertexSequence path;
    std::vector<VertexSet> heavy;
};

// Starts at the least-id vertex and extends by the least-id vertex of
// N(p_k) ∩ D_{k-1} ∩ N(D_k) until N[P] is balanced (D_0 = V(g)). Requires a
// connected graph and a non-trivial weighting covering it.
GrowthTrace gyarfas_growth(const Graph& g, const Weighting& w);

// Induced path P with N[P] balanced and, when |P| >= 2, N[P - last] not
// balanced.
VertexSequence gyarfas_path(const Graph& g, const Weighting& w);

// (N[B] ∩ x) ∪ y where B is the heavy component of g - z. Requires z ⊆ x,
// x ∪ y balanced and z not balanced; the result is balanced.
VertexSet thin_separator(const Graph& g, const Weighting& w, const VertexSet& x, const VertexSet& y,
                         const VertexSet& z);

// Inclusive index range [a, b] into a path.
struct Window {
    std::size_t a = 0;
    std::size_t b = 0;
    friend bool operator==(const Window&, const Window&) = default;
};

// Inclusion-minimal window of `path` whose open neighbourhood covers
// `targets`: b is the least feasible right end, a the largest left end for
// that b. Every target needs a neighbour on the path.
Window minimal_window(const Graph& g, const VertexSequence& path, const VertexSet& targets);

// N[C ∪ {p}] is balanced. p is absent when the last path vertex had to be
// used on the cycle itself; N[C] is then balanced on its own.
struct CycleVariant {
    VertexSequence cycle;
    std::optional<VertexId> p;
};

// N[{p, q}] is balanced; p == q is allowed.
struct PairVariant {
    VertexId p;
    VertexId q;
};

using CycleOrPair = std::variant<CycleVariant, PairVariant>;

// Balanced separator dominated by two vertices, or by an induced cycle of
// length at least 4 and one more vertex. Requires a connected graph and a
// non-trivial weighting.
CycleOrPair cycle_plus_vertex(const Graph& g, const Weighting& w);

// Vertices whose closed neighbourhood the variant claims is balanced.
VertexSet dominating_vertices(const CycleOrPair& result);

} // namespace wheelsep
