// Copyright (c) wheelsep contributors.
// SPDX-License-Identifier: Apache-2.0
#include "wheelsep/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "wheelsep/error.hpp"

namespace wheelsep {

Graph::Graph(std::vector<VertexId> vertices, std::span<const Edge> edges) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
        throw PreconditionError("duplicate vertex id");
    }
    const std::size_t bound = vertices_.empty() ? 0 : vertices_.back() + 1;
    present_.assign(bound, 0);
    adjacency_.assign(bound, {});
    for (VertexId v : vertices_) {
        present_[v] = 1;
    }
    for (const auto& [u, v] : edges) {
        if (!contains(u) || !contains(v)) {
            throw PreconditionError("edge endpoint not in graph: " + std::to_string(u) + "-" + std::to_string(v));
        }
        if (u == v) {
            throw PreconditionError("self-loop at vertex " + std::to_string(u));
        }
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (VertexId v : vertices_) {
        auto& list = adjacency_[v];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        edge_count_ += list.size();
    }
    edge_count_ /= 2;
}

bool Graph::adjacent(VertexId u, VertexId v) const noexcept {
    if (!contains(u) || !contains(v)) {
        return false;
    }
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
    if (!contains(v)) {
        throw PreconditionError("vertex not in graph: " + std::to_string(v));
    }
    return adjacency_[v];
}

std::vector<Graph::Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u : vertices_) {
        for (VertexId v : adjacency_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

Graph Graph::induced(const VertexSet& keep) const {
    std::vector<VertexId> kept;
    for (VertexId v : keep) {
        if (contains(v)) {
            kept.push_back(v);
        }
    }
    std::vector<Edge> es;
    for (VertexId u : kept) {
        for (VertexId v : adjacency_[u]) {
            if (u < v && keep.count(v)) {
                es.emplace_back(u, v);
            }
        }
    }
    return Graph(std::move(kept), es);
}

Graph Graph::without(const VertexSet& drop) const {
    VertexSet keep;
    for (VertexId v : vertices_) {
        if (!drop.count(v)) {
            keep.insert(v);
        }
    }
    return induced(keep);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool intersects(const VertexSet& a, const VertexSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) {
            return true;
        }
        if (*i < *j) {
            ++i;
        } else {
            ++j;
        }
    }
    return false;
}

namespace {

template <class Range>
std::string join_ids(const Range& r, char open, char close) {
    std::ostringstream os;
    os << open;
    bool first = true;
    for (VertexId v : r) {
        if (!first) {
            os << ',';
        }
        os << v;
        first = false;
    }
    os << close;
    return os.str();
}

void require_subset(const Graph& g, const VertexSet& a) {
    for (VertexId v : a) {
        if (!g.contains(v)) {
            throw PreconditionError("vertex not in graph: " + std::to_string(v));
        }
    }
}

// Flood fill from `start` inside g - removed; `seen` is indexed by id.
VertexSet flood(const Graph& g, VertexId start, const VertexSet& removed, std::vector<char>& seen) {
    VertexSet comp;
    std::vector<VertexId> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        comp.insert(v);
        for (VertexId u : g.neighbors(v)) {
            if (!seen[u] && !removed.count(u)) {
                seen[u] = 1;
                stack.push_back(u);
            }
        }
    }
    return comp;
}

void require_distinct(const VertexSequence& s) {
    VertexSet seen(s.begin(), s.end());
    if (seen.size() != s.size()) {
        throw PreconditionError("vertex sequence has a repeated vertex");
    }
}

} // namespace

std::string to_string(const VertexSet& s) { return join_ids(s, '{', '}'); }
std::string to_string(const VertexSequence& s) { return join_ids(s, '(', ')'); }

std::vector<VertexSet> components(const Graph& g) { return components_without(g, {}); }

std::vector<VertexSet> components_without(const Graph& g, const VertexSet& removed) {
    std::vector<char> seen(g.next_free_id(), 0);
    std::vector<VertexSet> out;
    for (VertexId v : g.vertices()) {
        if (!seen[v] && !removed.count(v)) {
            out.push_back(flood(g, v, removed, seen));
        }
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_connected_subset(const Graph& g, const VertexSet& a) {
    if (a.empty()) {
        return false;
    }
    require_subset(g, a);
    return components(g.induced(a)).size() == 1;
}

bool is_tree(const Graph& g) { return !g.empty() && is_connected(g) && g.edge_count() + 1 == g.order(); }

VertexSet closed_neighborhood(const Graph& g, const VertexSet& a) {
    require_subset(g, a);
    VertexSet out = a;
    for (VertexId v : a) {
        const auto& nb = g.neighbors(v);
        out.insert(nb.begin(), nb.end());
    }
    return out;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& a) { return set_minus(closed_neighborhood(g, a), a); }

bool is_induced_path(const Graph& g, const VertexSequence& s) {
    require_distinct(s);
    require_subset(g, VertexSet(s.begin(), s.end()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (g.adjacent(s[i], s[j]) != (j == i + 1)) {
                return false;
            }
        }
    }
    return true;
}

bool is_induced_cycle(const Graph& g, const VertexSequence& s) {
    require_distinct(s);
    require_subset(g, VertexSet(s.begin(), s.end()));
    const std::size_t n = s.size();
    if (n < 3) {
        return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool consecutive = (j == i + 1) || (i == 0 && j == n - 1);
            if (g.adjacent(s[i], s[j]) != consecutive) {
                return false;
            }
        }
    }
    return true;
}

VertexSet ContractionMap::expand(const VertexSet& image_vertices) const {
    VertexSet out;
    for (VertexId v : image_vertices) {
        const auto& fiber = fibers.at(v);
        out.insert(fiber.begin(), fiber.end());
    }
    return out;
}

ContractionMap contract_components(const Graph& g, const VertexSet& keep) {
    require_subset(g, keep);
    ContractionMap map;
    map.origin = g;

    std::vector<VertexId> image_vertices(keep.begin(), keep.end());
    std::vector<VertexId> owner(g.next_free_id(), 0);
    for (VertexId v : keep) {
        map.fibers[v] = {v};
        owner[v] = v;
    }
    VertexId fresh = g.next_free_id();
    for (const auto& comp : components_without(g, keep)) {
        map.fibers[fresh] = comp;
        for (VertexId v : comp) {
            owner[v] = fresh;
        }
        image_vertices.push_back(fresh);
        ++fresh;
    }

    std::vector<Graph::Edge> es;
    for (const auto& [u, v] : g.edges()) {
        const VertexId a = owner[u];
        const VertexId b = owner[v];
        if (a != b) {
            es.emplace_back(std::min(a, b), std::max(a, b));
        }
    }
    map.image = Graph(std::move(image_vertices), es);
    return map;
}

std::optional<VertexSequence> shortest_path(const Graph& g, VertexId from, VertexId to, const VertexSet& allowed) {
    require_subset(g, {from, to});
    if (!allowed.count(from) || !allowed.count(to)) {
        throw PreconditionError("shortest_path endpoints must lie in the allowed set");
    }
    constexpr VertexId kUnset = ~VertexId{0};
    std::vector<VertexId> parent(g.next_free_id(), kUnset);
    std::deque<VertexId> queue{from};
    parent[from] = from;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        if (v == to) {
            break;
        }
        for (VertexId u : g.neighbors(v)) {
            if (parent[u] == kUnset && allowed.count(u)) {
                parent[u] = v;
                queue.push_back(u);
            }
        }
    }
    if (parent[to] == kUnset) {
        return std::nullopt;
    }
    VertexSequence path{to};
    while (path.back() != from) {
        path.push_back(parent[path.back()]);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

bool separates(const Graph& g, const VertexSet& s, const VertexSet& a, const VertexSet& b) {
    std::vector<char> seen(g.next_free_id(), 0);
    std::vector<VertexId> stack;
    for (VertexId v : a) {
        if (g.contains(v) && !s.count(v)) {
            seen[v] = 1;
            stack.push_back(v);
        }
    }
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        if (b.count(v)) {
            return false;
        }
        for (VertexId u : g.neighbors(v)) {
            if (!seen[u] && !s.count(u)) {
                seen[u] = 1;
                stack.push_back(u);
            }
        }
    }
    return true;
}

namespace families {

namespace {
std::vector<VertexId> iota_ids(std::size_t n) {
    std::vector<VertexId> ids(n);
    for (std::size_t i = 0; i < n; ++i) {
        ids[i] = static_cast<VertexId>(i);
    }
    return ids;
}
} // namespace

Graph path(std::size_t n) {
    std::vector<Graph::Edge> es;
    for (std::size_t i = 1; i < n; ++i) {
        es.emplace_back(i - 1, i);
    }
    return Graph(iota_ids(n), es);
}

Graph cycle(std::size_t n) {
    std::vector<Graph::Edge> es;
    for (std::size_t i = 0; i < n; ++i) {
        es.emplace_back(i, (i + 1) % n);
    }
    return Graph(iota_ids(n), es);
}

Graph complete(std::size_t n) {
    std::vector<Graph::Edge> es;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            es.emplace_back(i, j);
        }
    }
    return Graph(iota_ids(n), es);
}

Graph star(std::size_t leaves) {
    std::vector<Graph::Edge> es;
    for (std::size_t i = 1; i <= leaves; ++i) {
        es.emplace_back(0, i);
    }
    return Graph(iota_ids(leaves + 1), es);
}

Graph wheel(std::size_t ell) {
    std::vector<Graph::Edge> es;
    for (std::size_t i = 1; i <= ell; ++i) {
        es.emplace_back(0, i);
        es.emplace_back(i, i % ell + 1);
    }
    return Graph(iota_ids(ell + 1), es);
}

Graph fan(std::size_t ell) {
    std::vector<Graph::Edge> es;
    for (std::size_t i = 1; i <= ell; ++i) {
        es.emplace_back(0, i);
        if (i > 1) {
            es.emplace_back(i - 1, i);
        }
    }
    return Graph(iota_ids(ell + 1), es);
}

Graph grid(std::size_t rows, std::size_t cols) {
    std::vector<Graph::Edge> es;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const std::size_t v = r * cols + c;
            if (c + 1 < cols) {
                es.emplace_back(v, v + 1);
            }
            if (r + 1 < rows) {
                es.emplace_back(v, v + cols);
            }
        }
    }
    return Graph(iota_ids(rows * cols), es);
}

} // namespace families

} // namespace wheelsep
