// Copyright (c) wheelsep contributors.
// SPDX-License-Identifier: Apache-2.0
#include "wheelsep/minor_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "wheelsep/error.hpp"

namespace wheelsep {

bool verify_model(const Graph& host, const InducedMinorWitness& witness) {
    const auto& pattern = witness.pattern;
    for (const auto& [p, set] : witness.branch_sets) {
        for (VertexId v : set) {
            if (!host.contains(v)) {
                throw PreconditionError("branch set vertex not in host: " + std::to_string(v));
            }
        }
        if (!pattern.contains(p)) {
            return false;
        }
    }
    if (witness.branch_sets.size() != pattern.order()) {
        return false;
    }

    std::vector<VertexId> owner(host.next_free_id(), 0);
    std::vector<char> owned(host.next_free_id(), 0);
    for (const auto& [p, set] : witness.branch_sets) {
        if (set.empty() || !is_connected_subset(host, set)) {
            return false;
        }
        for (VertexId v : set) {
            if (owned[v]) {
                return false;
            }
            owned[v] = 1;
            owner[v] = p;
        }
    }

    std::set<std::pair<VertexId, VertexId>> touching;
    for (const auto& [u, v] : host.edges()) {
        if (owned[u] && owned[v] && owner[u] != owner[v]) {
            touching.emplace(std::min(owner[u], owner[v]), std::max(owner[u], owner[v]));
        }
    }
    for (VertexId a : pattern.vertices()) {
        for (VertexId b : pattern.vertices()) {
            if (a < b && pattern.adjacent(a, b) != (touching.count({a, b}) > 0)) {
                return false;
            }
        }
    }
    return true;
}

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

// Host graph as bitmasks over positions 0..n-1, plus every connected vertex
// subset, grouped by member.
class BitHost {
  public:
    explicit BitHost(const Graph& g) : ids_(g.vertices()) {
        const std::size_t n = ids_.size();
        adj_.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            for (VertexId u : g.neighbors(ids_[i])) {
                adj_[i] |= bit(index_of(u));
            }
        }
        by_member_.assign(n, {});
        const Mask full = n == 64 ? ~Mask{0} : bit(n) - 1;
        for (Mask m = 1; m != 0 && m <= full; ++m) {
            if (connected(m)) {
                const Mask nb = neighbors_of(m);
                for (Mask rest = m; rest; rest &= rest - 1) {
                    by_member_[std::countr_zero(rest)].push_back({m, nb});
                }
                all_.push_back({m, nb});
            }
            if (m == full) {
                break;
            }
        }
    }

    struct Subset {
        Mask members;
        Mask boundary; // open neighbourhood
    };

    std::size_t size() const { return ids_.size(); }
    VertexId id(std::size_t i) const { return ids_[i]; }
    const std::vector<Subset>& all() const { return all_; }
    const std::vector<Subset>& containing(std::size_t i) const { return by_member_[i]; }

    Mask neighbors_of(Mask m) const {
        Mask out = 0;
        for (Mask rest = m; rest; rest &= rest - 1) {
            out |= adj_[std::countr_zero(rest)];
        }
        return out & ~m;
    }

    // Components of the host restricted to `region`, by least member.
    std::vector<Mask> components(Mask region) const {
        std::vector<Mask> out;
        while (region) {
            Mask comp = region & (~region + 1);
            for (;;) {
                Mask grown = comp | (neighbors_of(comp) & region);
                if (grown == comp) {
                    break;
                }
                comp = grown;
            }
            out.push_back(comp);
            region &= ~comp;
        }
        return out;
    }

    VertexSet to_set(Mask m) const {
        VertexSet out;
        for (Mask rest = m; rest; rest &= rest - 1) {
            out.insert(ids_[std::countr_zero(rest)]);
        }
        return out;
    }

  private:
    std::size_t index_of(VertexId v) const {
        return static_cast<std::size_t>(std::lower_bound(ids_.begin(), ids_.end(), v) - ids_.begin());
    }

    bool connected(Mask m) const {
        Mask reach = m & (~m + 1);
        for (;;) {
            Mask grown = reach | (neighbors_of(reach) & m);
            if (grown == reach) {
                return reach == m;
            }
            reach = grown;
        }
    }

    std::vector<VertexId> ids_;
    std::vector<Mask> adj_;
    std::vector<Subset> all_;
    std::vector<std::vector<Subset>> by_member_;
};

class MinorSearch {
  public:
    MinorSearch(const BitHost& host, const Graph& pattern) : host_(host), pattern_(pattern) {
        order_ = pattern.vertices();
        std::stable_sort(order_.begin(), order_.end(),
                         [&](VertexId a, VertexId b) { return pattern.degree(a) < pattern.degree(b); });
        const std::size_t h = order_.size();
        sets_.assign(h, 0);
        boundaries_.assign(h, 0);
        linked_.assign(h, std::vector<char>(h, 0));
        for (std::size_t i = 0; i < h; ++i) {
            for (std::size_t j = 0; j < h; ++j) {
                linked_[i][j] = pattern.adjacent(order_[i], order_[j]) ? 1 : 0;
            }
        }
    }

    std::optional<InducedMinorWitness> run() {
        if (order_.empty()) {
            return InducedMinorWitness{pattern_, {}};
        }
        if (!place(0, 0)) {
            return std::nullopt;
        }
        InducedMinorWitness w{pattern_, {}};
        for (std::size_t i = 0; i < order_.size(); ++i) {
            w.branch_sets[order_[i]] = host_.to_set(sets_[i]);
        }
        return w;
    }

  private:
    bool compatible(std::size_t depth, const BitHost::Subset& s) const {
        for (std::size_t j = 0; j < depth; ++j) {
            const bool touches = (s.boundary & sets_[j]) != 0;
            if (touches != static_cast<bool>(linked_[depth][j])) {
                return false;
            }
        }
        return true;
    }

    // The last branch set may as well be a whole component of the region that
    // avoids every set it must not touch.
    bool place_last(std::size_t depth, Mask used) {
        Mask region = ~used;
        if (host_.size() < 64) {
            region &= bit(host_.size()) - 1;
        }
        for (std::size_t j = 0; j < depth; ++j) {
            if (!linked_[depth][j]) {
                region &= ~boundaries_[j];
            }
        }
        for (Mask comp : host_.components(region)) {
            const Mask boundary = host_.neighbors_of(comp);
            bool ok = true;
            for (std::size_t j = 0; j < depth && ok; ++j) {
                if (linked_[depth][j] && (boundary & sets_[j]) == 0) {
                    ok = false;
                }
            }
            if (ok) {
                sets_[depth] = comp;
                boundaries_[depth] = boundary;
                return true;
            }
        }
        return false;
    }

    bool place(std::size_t depth, Mask used) {
        const std::size_t h = order_.size();
        if (static_cast<std::size_t>(std::popcount(used)) + (h - depth) > host_.size()) {
            return false;
        }
        if (depth + 1 == h) {
            return place_last(depth, used);
        }

        // Restrict to sets meeting the boundary of an already placed neighbour,
        // choosing the neighbour with the smallest free boundary.
        std::optional<Mask> gate;
        for (std::size_t j = 0; j < depth; ++j) {
            if (linked_[depth][j]) {
                const Mask free_boundary = boundaries_[j] & ~used;
                if (!gate || std::popcount(free_boundary) < std::popcount(*gate)) {
                    gate = free_boundary;
                }
            }
        }

        auto attempt = [&](const BitHost::Subset& s) {
            if ((s.members & used) != 0 || !compatible(depth, s)) {
                return false;
            }
            sets_[depth] = s.members;
            boundaries_[depth] = s.boundary;
            return place(depth + 1, used | s.members);
        };

        if (!gate) {
            for (const auto& s : host_.all()) {
                if (attempt(s)) {
                    return true;
                }
            }
            return false;
        }
        for (Mask rest = *gate; rest; rest &= rest - 1) {
            const std::size_t x = static_cast<std::size_t>(std::countr_zero(rest));
            const Mask lower = *gate & (bit(x) - 1);
            for (const auto& s : host_.containing(x)) {
                // Each set is tried once: x is its least member inside the gate.
                if ((s.members & lower) == 0 && attempt(s)) {
                    return true;
                }
            }
        }
        return false;
    }

    const BitHost& host_;
    const Graph& pattern_;
    std::vector<VertexId> order_;
    std::vector<Mask> sets_;
    std::vector<Mask> boundaries_;
    std::vector<std::vector<char>> linked_;
};

void require_induced_cycle(const Graph& g, const VertexSequence& cycle) {
    if (!is_induced_cycle(g, cycle)) {
        throw PreconditionError("cycle is not an induced cycle of the graph");
    }
}

} // namespace

std::optional<InducedMinorWitness> find_induced_minor(const Graph& host, const Graph& pattern, std::size_t cap) {
    if (cap > kMaxOracleCap) {
        throw PreconditionError("oracle cap above " + std::to_string(kMaxOracleCap));
    }
    if (host.order() > cap) {
        throw PreconditionError("host too large for exhaustive oracle");
    }
    if (pattern.order() > host.order() || pattern.edge_count() > host.edge_count()) {
        return std::nullopt;
    }
    BitHost bits(host);
    auto found = MinorSearch(bits, pattern).run();
    if (found && !verify_model(host, *found)) {
        throw InternalError("oracle produced an invalid model");
    }
    return found;
}

InducedMinorWitness wheel_witness_from_component(const Graph& g, const VertexSequence& cycle,
                                                 const VertexSet& component, std::size_t ell) {
    if (ell < 3) {
        throw PreconditionError("wheel size must be at least 3");
    }
    require_induced_cycle(g, cycle);
    const VertexSet on_cycle(cycle.begin(), cycle.end());
    if (component.empty() || intersects(component, on_cycle) || !is_connected_subset(g, component)) {
        throw PreconditionError("component is not a connected set disjoint from the cycle");
    }
    const VertexSet boundary = open_neighborhood(g, component);
    if (!is_subset(boundary, on_cycle)) {
        throw PreconditionError("component is not a component of G - V(C)");
    }
    if (boundary.size() < ell) {
        throw PreconditionError("component has fewer than ell neighbours on the cycle");
    }

    const std::size_t n = cycle.size();
    std::size_t start = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (cycle[i] == *boundary.begin()) {
            start = i;
        }
    }
    std::vector<std::size_t> anchors; // offsets from start
    for (std::size_t k = 0; k < n && anchors.size() < ell; ++k) {
        if (boundary.count(cycle[(start + k) % n])) {
            anchors.push_back(k);
        }
    }

    InducedMinorWitness w{families::wheel(ell), {}};
    w.branch_sets[0] = component;
    for (std::size_t j = 0; j < ell; ++j) {
        const std::size_t end = j + 1 < ell ? anchors[j + 1] : n;
        VertexSet arc;
        for (std::size_t k = anchors[j]; k < end; ++k) {
            arc.insert(cycle[(start + k) % n]);
        }
        w.branch_sets[static_cast<VertexId>(j + 1)] = std::move(arc);
    }
    if (!verify_model(g, w)) {
        throw InternalError("wheel construction failed to verify for cycle " + to_string(cycle));
    }
    return w;
}

InducedMinorWitness fan_witness(const Graph& g, const VertexSequence& path, const VertexSet& component,
                                std::size_t ell) {
    if (ell < 2) {
        throw PreconditionError("fan size must be at least 2");
    }
    if (!is_induced_path(g, path)) {
        throw PreconditionError("path is not an induced path of the graph");
    }
    const VertexSet on_path(path.begin(), path.end());
    if (component.empty() || intersects(component, on_path) || !is_connected_subset(g, component)) {
        throw PreconditionError("component is not a connected set disjoint from the path");
    }
    const VertexSet boundary = set_intersection(open_neighborhood(g, component), on_path);
    if (boundary.size() < ell) {
        throw PreconditionError("component has fewer than ell neighbours on the path");
    }

    std::vector<std::size_t> anchors;
    for (std::size_t i = 0; i < path.size() && anchors.size() < ell; ++i) {
        if (boundary.count(path[i])) {
            anchors.push_back(i);
        }
    }
    InducedMinorWitness w{families::fan(ell), {}};
    w.branch_sets[0] = component;
    for (std::size_t j = 0; j < ell; ++j) {
        const std::size_t end = j + 1 < ell ? anchors[j + 1] : anchors[j] + 1;
        VertexSet segment;
        for (std::size_t i = anchors[j]; i < end; ++i) {
            segment.insert(path[i]);
        }
        w.branch_sets[static_cast<VertexId>(j + 1)] = std::move(segment);
    }
    if (!verify_model(g, w)) {
        throw InternalError("fan construction failed to verify for path " + to_string(path));
    }
    return w;
}

SeriesParallelReduction series_parallel_reduction(const Graph& g) {
    std::vector<VertexSet> adj(g.next_free_id());
    std::vector<char> alive(g.next_free_id(), 0);
    SeriesParallelReduction out;
    VertexSet low; // alive vertices of degree <= 2
    for (VertexId v : g.vertices()) {
        adj[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
        alive[v] = 1;
        out.fibers[v] = {v};
        if (adj[v].size() <= 2) {
            low.insert(v);
        }
    }
    auto drop_edge = [&](VertexId a, VertexId b) {
        adj[a].erase(b);
        adj[b].erase(a);
        if (adj[a].size() <= 2) {
            low.insert(a);
        }
        if (adj[b].size() <= 2) {
            low.insert(b);
        }
    };

    while (!low.empty()) {
        const VertexId v = *low.begin();
        low.erase(low.begin());
        std::vector<VertexId> nb(adj[v].begin(), adj[v].end());
        out.steps.push_back({v, nb});
        alive[v] = 0;
        for (VertexId u : nb) {
            drop_edge(v, u);
        }
        low.erase(v);
        if (nb.size() == 2 && !adj[nb[0]].count(nb[1])) {
            // Suppress v into its lesser neighbour.
            adj[nb[0]].insert(nb[1]);
            adj[nb[1]].insert(nb[0]);
            low.erase(nb[0]);
            low.erase(nb[1]);
            if (adj[nb[0]].size() <= 2) {
                low.insert(nb[0]);
            }
            if (adj[nb[1]].size() <= 2) {
                low.insert(nb[1]);
            }
            out.fibers[nb[0]].insert(out.fibers[v].begin(), out.fibers[v].end());
        }
        out.fibers.erase(v);
    }

    std::vector<VertexId> rest;
    std::vector<Graph::Edge> es;
    for (VertexId v : g.vertices()) {
        if (alive[v]) {
            rest.push_back(v);
            for (VertexId u : adj[v]) {
                if (v < u) {
                    es.emplace_back(v, u);
                }
            }
        }
    }
    out.core = Graph(std::move(rest), es);
    return out;
}

bool k4_minor_free(const Graph& g) { return series_parallel_reduction(g).core.empty(); }

namespace {

Graph contract_edge(const Graph& h, VertexId keep, VertexId gone) {
    std::vector<VertexId> vs;
    for (VertexId v : h.vertices()) {
        if (v != gone) {
            vs.push_back(v);
        }
    }
    std::vector<Graph::Edge> es;
    for (auto [a, b] : h.edges()) {
        if (a == gone) {
            a = keep;
        }
        if (b == gone) {
            b = keep;
        }
        if (a != b) {
            es.emplace_back(a, b);
        }
    }
    return Graph(std::move(vs), es);
}

struct Core {
    Graph graph;
    std::map<VertexId, VertexSet> fibers; // core vertex -> vertices of the original graph
};

// Reduce `h` and express the resulting core fibers in terms of the original
// graph through `fibers`.
Core reduce(const Graph& h, const std::map<VertexId, VertexSet>& fibers) {
    auto red = series_parallel_reduction(h);
    Core out{std::move(red.core), {}};
    for (const auto& [v, inner] : red.fibers) {
        VertexSet& target = out.fibers[v];
        for (VertexId x : inner) {
            const auto& f = fibers.at(x);
            target.insert(f.begin(), f.end());
        }
    }
    return out;
}

} // namespace

InducedMinorWitness k4_witness(const Graph& g) {
    std::map<VertexId, VertexSet> identity;
    for (VertexId v : g.vertices()) {
        identity[v] = {v};
    }
    Core core = reduce(g, identity);
    if (core.graph.empty()) {
        throw PreconditionError("graph is K4-minor-free");
    }
    while (core.graph.order() > 4) {
        bool progressed = false;
        for (VertexId v : core.graph.vertices()) {
            Core next = reduce(core.graph.without({v}), core.fibers);
            if (!next.graph.empty()) {
                core = std::move(next);
                progressed = true;
                break;
            }
        }
        if (!progressed) {
            for (const auto& [a, b] : core.graph.edges()) {
                auto merged = core.fibers;
                merged[a].insert(merged[b].begin(), merged[b].end());
                merged.erase(b);
                Core next = reduce(contract_edge(core.graph, a, b), merged);
                if (!next.graph.empty()) {
                    core = std::move(next);
                    progressed = true;
                    break;
                }
            }
        }
        if (!progressed) {
            throw InternalError("K4 minimisation stalled on a core of " + std::to_string(core.graph.order()) +
                                " vertices");
        }
    }
    InducedMinorWitness w{families::wheel(3), {}};
    VertexId p = 0;
    for (VertexId v : core.graph.vertices()) {
        w.branch_sets[p++] = core.fibers.at(v);
    }
    if (!verify_model(g, w)) {
        throw InternalError("K4 model failed to verify");
    }
    return w;
}

InducedMinorWitness lift_witness(const InducedMinorWitness& witness, const ContractionMap& contraction) {
    InducedMinorWitness out{witness.pattern, {}};
    for (const auto& [p, set] : witness.branch_sets) {
        out.branch_sets[p] = contraction.expand(set);
    }
    return out;
}

} // namespace wheelsep
