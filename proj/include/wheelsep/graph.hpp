// Copyright (c) wheelsep contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wheelsep {

using VertexId = std::uint32_t;
using VertexSet = std::set<VertexId>;

// Ordered list of distinct vertices: a path p1..pk, or a cycle that closes
// from the last item back to the first.
using VertexSequence = std::vector<VertexId>;

// Simple undirected graph with stable vertex identities. Immutable once
// built; every derived graph is a new value. Neighbour lists are sorted so
// all traversals run in increasing id order.
class Graph {
  public:
    using Edge = std::pair<VertexId, VertexId>;

    Graph() = default;
    // Throws PreconditionError on duplicate vertices, self-loops, or edges
    // with an unknown endpoint. Repeated edges collapse to one.
    Graph(std::vector<VertexId> vertices, std::span<const Edge> edges);
    Graph(std::vector<VertexId> vertices, std::initializer_list<Edge> edges)
        : Graph(std::move(vertices), std::span<const Edge>(edges.begin(), edges.size())) {}

    const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
    VertexSet vertex_set() const { return {vertices_.begin(), vertices_.end()}; }
    std::size_t order() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    bool empty() const noexcept { return vertices_.empty(); }

    bool contains(VertexId v) const noexcept { return v < present_.size() && present_[v]; }
    bool adjacent(VertexId u, VertexId v) const noexcept;
    // Throws PreconditionError("vertex not in graph") for unknown v.
    const std::vector<VertexId>& neighbors(VertexId v) const;
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }

    // Edges as (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;

    Graph induced(const VertexSet& keep) const;
    Graph without(const VertexSet& drop) const;

    // Smallest id larger than every vertex id (0 for the empty graph).
    VertexId next_free_id() const noexcept { return vertices_.empty() ? 0 : vertices_.back() + 1; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertices_ == b.vertices_ && a.adjacency_ == b.adjacency_;
    }

  private:
    std::vector<VertexId> vertices_;
    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<char> present_;
    std::size_t edge_count_ = 0;
};

// -- vertex-set helpers -------------------------------------------------------

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_minus(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);
bool intersects(const VertexSet& a, const VertexSet& b);
std::string to_string(const VertexSet& s);
std::string to_string(const VertexSequence& s);

// -- basic operations ---------------------------------------------------------

// Vertex sets of the connected components, each sorted, ordered by least
// element.
std::vector<VertexSet> components(const Graph& g);
// Components of g - removed, without materialising the subgraph.
std::vector<VertexSet> components_without(const Graph& g, const VertexSet& removed);
bool is_connected(const Graph& g);
bool is_connected_subset(const Graph& g, const VertexSet& a);
bool is_tree(const Graph& g);

// N[A]. Throws PreconditionError("vertex not in graph") if A is not a subset
// of V(g).
VertexSet closed_neighborhood(const Graph& g, const VertexSet& a);
// N(A) = N[A] \ A.
VertexSet open_neighborhood(const Graph& g, const VertexSet& a);

// Consecutive items adjacent, all other pairs non-adjacent. Sequences with
// repeated or unknown vertices are rejected with PreconditionError.
bool is_induced_path(const Graph& g, const VertexSequence& s);
// As above, wrapping from last to first; requires at least 3 items.
bool is_induced_cycle(const Graph& g, const VertexSequence& s);

// Result of contracting every component of origin - keep to a single vertex.
struct ContractionMap {
    Graph origin;
    Graph image;
    std::map<VertexId, VertexSet> fibers; // image vertex -> origin vertices

    // Union of the fibers of the given image vertices.
    VertexSet expand(const VertexSet& image_vertices) const;
};

// Vertices in keep retain their ids; contracted components receive fresh ids
// starting at origin.next_free_id(), in increasing order of their least
// origin vertex.
ContractionMap contract_components(const Graph& g, const VertexSet& keep);

// BFS shortest path inside g[allowed], neighbours scanned in increasing id
// order. Returns nullopt when `to` is unreachable.
std::optional<VertexSequence> shortest_path(const Graph& g, VertexId from, VertexId to,
                                            const VertexSet& allowed);

// True iff every (A,B)-path of g meets s.
bool separates(const Graph& g, const VertexSet& s, const VertexSet& a, const VertexSet& b);

// -- small families -----------------------------------------------------------

namespace families {
Graph path(std::size_t n);               // 0-1-...-(n-1)
Graph cycle(std::size_t n);              // 0..n-1 closed up
Graph complete(std::size_t n);
Graph star(std::size_t leaves);          // centre 0
Graph wheel(std::size_t ell);            // hub 0, rim 1..ell in cycle order
Graph fan(std::size_t ell);              // hub 0, path 1..ell
Graph grid(std::size_t rows, std::size_t cols);
} // namespace families

} // namespace wheelsep
