// Copyright (c) wheelsep contributors.
// SPDX-License-Identifier: Apache-2.0
#include "wheelsep/cobweb.hpp"

#include <algorithm>

#include "wheelsep/error.hpp"

namespace wheelsep {

Cobweb validate_cobweb(const Graph& g, const VertexSequence& cycle, const VertexSet& independent) {
    if (cycle.size() < 3 || !is_induced_cycle(g, cycle)) {
        throw PreconditionError("cycle not induced");
    }
    const VertexSet on_cycle(cycle.begin(), cycle.end());
    if (independent != set_minus(g.vertex_set(), on_cycle)) {
        throw PreconditionError("independent set must be V - C");
    }
    if (independent.empty()) {
        throw PreconditionError("independent set empty");
    }
    for (VertexId u : independent) {
        for (VertexId x : g.neighbors(u)) {
            if (independent.count(x)) {
                throw PreconditionError("independent set has an edge");
            }
        }
    }
    for (VertexId v : g.vertices()) {
        if (g.degree(v) < 2) {
            throw PreconditionError("minimum degree");
        }
    }
    for (VertexId u : independent) {
        const VertexSet nu(g.neighbors(u).begin(), g.neighbors(u).end());
        for (VertexId v : independent) {
            if (u != v && is_subset(nu, VertexSet(g.neighbors(v).begin(), g.neighbors(v).end()))) {
                throw PreconditionError("nested neighbourhoods");
            }
        }
    }
    return Cobweb{g, cycle, independent};
}

bool is_trivial(const Wedge& w) { return w.arc.size() == 2; }

bool is_co_trivial(const Cobweb& cw, const Wedge& w) { return w.arc.size() == cw.cycle.size(); }

VertexSet arc_vertices(const Wedge& w) { return {w.arc.begin(), w.arc.end()}; }

std::set<Graph::Edge> arc_edges(const Wedge& w) {
    std::set<Graph::Edge> out;
    for (std::size_t i = 0; i + 1 < w.arc.size(); ++i) {
        out.emplace(std::min(w.arc[i], w.arc[i + 1]), std::max(w.arc[i], w.arc[i + 1]));
    }
    return out;
}

namespace {

void require_independent(const Cobweb& cw, VertexId v) {
    if (!cw.independent.count(v)) {
        throw PreconditionError("vertex " + std::to_string(v) + " not in the independent set");
    }
}

std::size_t position(const Cobweb& cw, VertexId c) {
    return static_cast<std::size_t>(std::find(cw.cycle.begin(), cw.cycle.end(), c) - cw.cycle.begin());
}

} // namespace

std::vector<Wedge> wedges_anchored(const Cobweb& cw, VertexId v) {
    require_independent(cw, v);
    const std::size_t n = cw.cycle.size();
    const auto& nb = cw.graph.neighbors(v);
    const std::size_t start = position(cw, nb.front());
    std::vector<std::size_t> offsets;
    for (std::size_t k = 0; k < n; ++k) {
        if (cw.graph.adjacent(v, cw.cycle[(start + k) % n])) {
            offsets.push_back(k);
        }
    }
    std::vector<Wedge> out;
    for (std::size_t j = 0; j < offsets.size(); ++j) {
        const std::size_t end = j + 1 < offsets.size() ? offsets[j + 1] : n;
        Wedge w{v, {}};
        for (std::size_t k = offsets[j]; k <= end; ++k) {
            w.arc.push_back(cw.cycle[(start + k) % n]);
        }
        if (w.arc.back() < w.arc.front()) {
            std::reverse(w.arc.begin(), w.arc.end());
        }
        out.push_back(std::move(w));
    }
    return out;
}

VertexSet barrier(const Cobweb& cw, const Wedge& w) {
    VertexSet out{w.arc.front(), w.arc.back()};
    if (is_co_trivial(cw, w)) {
        return out;
    }
    const VertexSet on_arc = arc_vertices(w);
    for (VertexId i : cw.independent) {
        bool outside = false;
        for (VertexId x : cw.graph.neighbors(i)) {
            outside = outside || !on_arc.count(x);
        }
        if (outside) {
            for (VertexId x : cw.graph.neighbors(i)) {
                if (on_arc.count(x)) {
                    out.insert(x);
                }
            }
        }
    }
    return out;
}

bool attaches(const Cobweb& cw, VertexId u, const Wedge& w) {
    require_independent(cw, u);
    if (u == w.anchor) {
        throw PreconditionError("attachment is undefined for the anchor");
    }
    const VertexSet on_arc = arc_vertices(w);
    for (VertexId x : cw.graph.neighbors(u)) {
        if (!on_arc.count(x)) {
            return false;
        }
    }
    return true;
}

bool barrier_separates(const Cobweb& cw, const Wedge& w, VertexId u) {
    require_independent(cw, u);
    if (u != w.anchor && attaches(cw, u, w)) {
        throw PreconditionError("vertex attaches to the wedge");
    }
    return separates(cw.graph, barrier(cw, w), {u}, arc_vertices(w));
}

bool improves(const WedgeSelection& sel, VertexId u, VertexId v) {
    const Wedge& a = sel.at(u);
    const Wedge& b = sel.at(v);
    const VertexSet va = arc_vertices(a);
    const VertexSet vb = arc_vertices(b);
    const auto ea = arc_edges(a);
    const auto eb = arc_edges(b);
    if (!is_subset(va, vb) || !std::includes(eb.begin(), eb.end(), ea.begin(), ea.end())) {
        return false;
    }
    return va != vb || ea != eb;
}

VertexSet good_vertices(const WedgeSelection& sel) {
    VertexSet out;
    for (const auto& [v, _] : sel) {
        bool minimal = true;
        for (const auto& [u, __] : sel) {
            if (u != v && improves(sel, u, v)) {
                minimal = false;
                break;
            }
        }
        if (minimal) {
            out.insert(v);
        }
    }
    return out;
}

std::vector<VertexSequence> intersection_components(const Cobweb& cw, const WedgeSelection& sel,
                                                    const VertexSet& t) {
    if (t.empty()) {
        throw PreconditionError("empty set of wedges");
    }
    VertexSet vs;
    std::set<Graph::Edge> es;
    bool first = true;
    for (VertexId u : t) {
        const Wedge& w = sel.at(u);
        if (first) {
            vs = arc_vertices(w);
            es = arc_edges(w);
            first = false;
            continue;
        }
        vs = set_intersection(vs, arc_vertices(w));
        const auto other = arc_edges(w);
        std::set<Graph::Edge> kept;
        std::set_intersection(es.begin(), es.end(), other.begin(), other.end(), std::inserter(kept, kept.end()));
        es = std::move(kept);
    }
    (void)cw;
    std::map<VertexId, std::vector<VertexId>> adj;
    for (VertexId v : vs) {
        adj[v];
    }
    for (const auto& [a, b] : es) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<VertexSequence> out;
    VertexSet seen;
    for (VertexId v : vs) {
        if (seen.count(v)) {
            continue;
        }
        // Collect the component, then walk it from its lesser-id endpoint.
        VertexSet comp{v};
        std::vector<VertexId> stack{v};
        while (!stack.empty()) {
            VertexId x = stack.back();
            stack.pop_back();
            for (VertexId y : adj[x]) {
                if (comp.insert(y).second) {
                    stack.push_back(y);
                }
            }
        }
        seen.insert(comp.begin(), comp.end());
        std::vector<VertexId> ends;
        for (VertexId x : comp) {
            if (adj[x].size() <= 1) {
                ends.push_back(x);
            }
        }
        if (ends.empty()) {
            throw InternalError("arc intersection contains a cycle");
        }
        VertexSequence walk{ends.front()};
        VertexId prev = ends.front();
        while (walk.size() < comp.size()) {
            const VertexId cur = walk.back();
            VertexId next = cur;
            for (VertexId y : adj[cur]) {
                if (y != prev && (walk.size() < 2 || y != walk[walk.size() - 2])) {
                    next = y;
                }
            }
            if (next == cur) {
                throw InternalError("arc intersection is not a path");
            }
            prev = cur;
            walk.push_back(next);
        }
        out.push_back(std::move(walk));
    }
    std::sort(out.begin(), out.end());
    return out;
}

SeparatingPair separating_good_pair(const Cobweb& cw, const WedgeSelection& sel, const SegmentSelection& sigma) {
    std::vector<VertexSet> image;
    for (const auto& [t, seg] : sigma) {
        image.emplace_back(seg.begin(), seg.end());
    }
    for (std::size_t i = 0; i < image.size(); ++i) {
        for (std::size_t j = i + 1; j < image.size(); ++j) {
            if (!intersects(image[i], image[j])) {
                throw PreconditionError("intersecting precondition violated");
            }
        }
    }

    const VertexSet good = good_vertices(sel);
    struct Candidate {
        VertexId u;
        VertexId v;
        VertexSet segment;
    };
    std::vector<Candidate> candidates;
    for (VertexId u : good) {
        for (VertexId v : good) {
            if (u > v) {
                continue;
            }
            const VertexSet key = u == v ? VertexSet{u} : VertexSet{u, v};
            auto it = sigma.find(key);
            if (it == sigma.end()) {
                throw PreconditionError("segment selection misses good pair " + to_string(key));
            }
            candidates.push_back({u, v, VertexSet(it->second.begin(), it->second.end())});
        }
    }
    if (candidates.empty()) {
        throw PreconditionError("no good vertices");
    }
    const Candidate* chosen = nullptr;
    for (const auto& c : candidates) {
        bool minimal = true;
        for (const auto& d : candidates) {
            if (d.segment != c.segment && is_subset(d.segment, c.segment)) {
                minimal = false;
                break;
            }
        }
        if (minimal) {
            chosen = &c; // candidates are in lexicographic order
            break;
        }
    }
    SeparatingPair out{chosen->u, chosen->v,
                       set_union(barrier(cw, sel.at(chosen->u)), barrier(cw, sel.at(chosen->v)))};
    if (!separates(cw.graph, out.separator, cw.independent, chosen->segment)) {
        throw InternalError("barriers of pair (" + std::to_string(out.u) + ", " + std::to_string(out.v) +
                            ") do not separate I from segment " + to_string(chosen->segment));
    }
    return out;
}

} // namespace wheelsep
