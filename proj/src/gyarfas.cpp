// Copyright (c) wheelsep contributors.
// SPDX-License-Identifier: Apache-2.0
#include "wheelsep/gyarfas.hpp"

#include <algorithm>

#include "wheelsep/error.hpp"

namespace wheelsep {

namespace {

void require_connected_nontrivial(const Graph& g, const Weighting& w) {
    if (!w.covers(g)) {
        throw PreconditionError("weighting domain differs from the vertex set of the graph");
    }
    if (g.empty() || !is_connected(g)) {
        throw PreconditionError("graph is disconnected");
    }
    if (w.trivial()) {
        throw PreconditionError("weighting is trivial");
    }
}

// Heavy component relative to the total of w, which need not be normal.
std::optional<VertexSet> heavy_of(const Graph& g, const Weighting& w, const VertexSet& s) {
    for (auto& comp : components_without(g, s)) {
        if (w.heavy(comp)) {
            return std::move(comp);
        }
    }
    return std::nullopt;
}

} // namespace

GrowthTrace gyarfas_growth(const Graph& g, const Weighting& w) {
    require_connected_nontrivial(g, w);
    GrowthTrace trace;
    trace.path.push_back(g.vertices().front());
    VertexSet previous = g.vertex_set();
    VertexSet on_path{trace.path.front()};
    for (;;) {
        auto heavy = heavy_of(g, w, closed_neighborhood(g, on_path));
        if (!heavy) {
            return trace;
        }
        const VertexSet boundary = open_neighborhood(g, *heavy);
        std::optional<VertexId> next;
        for (VertexId u : g.neighbors(trace.path.back())) {
            if (previous.count(u) && boundary.count(u)) {
                next = u;
                break;
            }
        }
        if (!next || heavy->size() >= previous.size()) {
            throw InternalError("path growth stalled at " + to_string(trace.path));
        }
        trace.path.push_back(*next);
        on_path.insert(*next);
        trace.heavy.push_back(*heavy);
        previous = std::move(*heavy);
    }
}

VertexSequence gyarfas_path(const Graph& g, const Weighting& w) { return gyarfas_growth(g, w).path; }

VertexSet thin_separator(const Graph& g, const Weighting& w, const VertexSet& x, const VertexSet& y,
                         const VertexSet& z) {
    if (!w.covers(g)) {
        throw PreconditionError("weighting domain differs from the vertex set of the graph");
    }
    if (!is_subset(z, x)) {
        throw PreconditionError("z is not a subset of x");
    }
    if (!is_balanced_separator(g, w, set_union(x, y))) {
        throw PreconditionError("x ∪ y is not balanced");
    }
    auto b = heavy_of(g, w, z);
    if (!b) {
        throw PreconditionError("z is balanced");
    }
    VertexSet out = set_union(set_intersection(closed_neighborhood(g, *b), x), y);
    if (!is_balanced_separator(g, w, out)) {
        throw InternalError("thinned separator is not balanced");
    }
    return out;
}

Window minimal_window(const Graph& g, const VertexSequence& path, const VertexSet& targets) {
    std::vector<std::vector<std::size_t>> hits;
    for (VertexId z : targets) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < path.size(); ++i) {
            if (g.adjacent(z, path[i])) {
                idx.push_back(i);
            }
        }
        if (idx.empty()) {
            throw PreconditionError("vertex " + std::to_string(z) + " has no neighbour on the path");
        }
        hits.push_back(std::move(idx));
    }
    if (hits.empty()) {
        throw PreconditionError("no vertices to cover");
    }
    Window win{path.size(), 0};
    for (const auto& idx : hits) {
        win.b = std::max(win.b, idx.front());
    }
    for (const auto& idx : hits) {
        const auto it = std::upper_bound(idx.begin(), idx.end(), win.b);
        win.a = std::min(win.a, *std::prev(it));
    }
    return win;
}

CycleOrPair cycle_plus_vertex(const Graph& g, const Weighting& w) {
    const GrowthTrace trace = gyarfas_growth(g, w);
    const auto& path = trace.path;
    const std::size_t k = path.size();
    const VertexId p = path.back();
    if (k == 1) {
        return PairVariant{p, p};
    }
    const VertexSet& b = trace.heavy.back();
    const VertexSequence front(path.begin(), path.end() - 1);
    const VertexSet targets = open_neighborhood(g, b);
    const Window win = minimal_window(g, front, targets);
    if (win.a == win.b) {
        return PairVariant{p, front[win.a]};
    }

    auto touches = [&](VertexId z, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i <= hi; ++i) {
            if (g.adjacent(z, front[i])) {
                return true;
            }
        }
        return false;
    };
    std::optional<VertexId> x;
    std::optional<VertexId> y;
    for (VertexId z : targets) {
        if (!x && g.adjacent(z, front[win.a]) && !touches(z, win.a + 1, win.b)) {
            x = z;
        }
        if (g.adjacent(z, front[win.b]) && !touches(z, win.a, win.b - 1) && (!y || *y == p)) {
            y = z;
        }
    }
    if (!x || !y || *x == *y) {
        throw InternalError("private neighbours missing for window [" + std::to_string(win.a) + ", " +
                            std::to_string(win.b) + "] of " + to_string(path));
    }

    VertexSet allowed = b;
    allowed.insert(*x);
    allowed.insert(*y);
    auto r = shortest_path(g, *x, *y, allowed);
    if (!r) {
        throw InternalError("private neighbours not linked through the heavy component");
    }
    CycleVariant out;
    out.cycle.assign(front.begin() + static_cast<std::ptrdiff_t>(win.a),
                     front.begin() + static_cast<std::ptrdiff_t>(win.b) + 1);
    out.cycle.insert(out.cycle.end(), r->rbegin(), r->rend());
    if (std::find(out.cycle.begin(), out.cycle.end(), p) == out.cycle.end()) {
        out.p = p;
    }
    if (out.cycle.size() < 4 || !is_induced_cycle(g, out.cycle)) {
        throw InternalError("constructed cycle " + to_string(out.cycle) + " is not an induced cycle of length >= 4");
    }
    if (!is_balanced_separator(g, w, closed_neighborhood(g, dominating_vertices(out)))) {
        throw InternalError("cycle neighbourhood is not balanced");
    }
    return out;
}

VertexSet dominating_vertices(const CycleOrPair& result) {
    if (const auto* pair = std::get_if<PairVariant>(&result)) {
        return {pair->p, pair->q};
    }
    const auto& cyc = std::get<CycleVariant>(result);
    VertexSet out(cyc.cycle.begin(), cyc.cycle.end());
    if (cyc.p) {
        out.insert(*cyc.p);
    }
    return out;
}

} // namespace wheelsep
