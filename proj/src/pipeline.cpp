// Copyright (c) wheelsep contributors.
// SPDX-License-Identifier: Apache-2.0
#include "wheelsep/pipeline.hpp"

#include <algorithm>
#include <functional>

#include "wheelsep/cobweb.hpp"
#include "wheelsep/error.hpp"
#include "wheelsep/gyarfas.hpp"

namespace wheelsep {

std::size_t TreeDecomposition::width() const {
    std::size_t widest = 0;
    for (const auto& [_, bag] : bags) {
        widest = std::max(widest, bag.size());
    }
    return widest == 0 ? 0 : widest - 1;
}

bool is_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
    if (g.empty()) {
        return true;
    }
    if (!is_tree(td.tree) || td.bags.size() != td.tree.order()) {
        return false;
    }
    for (VertexId v : g.vertices()) {
        VertexSet nodes;
        for (const auto& [t, bag] : td.bags) {
            if (bag.count(v)) {
                nodes.insert(t);
            }
        }
        if (nodes.empty() || !is_connected_subset(td.tree, nodes)) {
            return false;
        }
    }
    for (const auto& [a, b] : g.edges()) {
        bool covered = false;
        for (const auto& [_, bag] : td.bags) {
            covered = covered || (bag.count(a) && bag.count(b));
        }
        if (!covered) {
            return false;
        }
    }
    return true;
}

VertexId tree_balanced_vertex(const Graph& t, const Weighting& w) {
    if (!is_tree(t)) {
        throw PreconditionError("not a tree");
    }
    if (!w.covers(t)) {
        throw PreconditionError("weighting domain differs from the vertex set of the graph");
    }
    if (w.trivial()) {
        throw PreconditionError("weighting is trivial");
    }
    const VertexId root = t.vertices().front();
    std::map<VertexId, VertexId> parent{{root, root}};
    std::vector<VertexId> order{root};
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (VertexId u : t.neighbors(order[i])) {
            if (!parent.count(u)) {
                parent[u] = order[i];
                order.push_back(u);
            }
        }
    }
    std::map<VertexId, Rational> below;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        below[*it] += w.at(*it);
        if (*it != root) {
            below[parent[*it]] += below[*it];
        }
    }
    const Rational& total = w.total();
    auto heavy = [&](const Rational& x) { return 2 * x > total; };

    // Orient each edge towards its heavy side; an edge without one settles it.
    std::set<VertexId> has_out_edge;
    for (const auto& [a, b] : t.edges()) {
        const VertexId child = parent[a] == b ? a : b;
        const VertexId up = child == a ? b : a;
        const Rational& low = below[child];
        const Rational high = total - low;
        if (!heavy(low) && !heavy(high)) {
            return a;
        }
        has_out_edge.insert(heavy(low) ? up : child);
    }
    for (VertexId v : t.vertices()) {
        if (!has_out_edge.count(v)) {
            return v;
        }
    }
    throw InternalError("edge orientation has no sink");
}

TreeDecomposition tw2_decomposition(const Graph& g) {
    const auto red = series_parallel_reduction(g);
    if (!red.core.empty()) {
        throw PreconditionError("graph has K4 minor");
    }
    std::map<VertexId, VertexId> node_of;
    for (std::size_t i = 0; i < red.steps.size(); ++i) {
        node_of[red.steps[i].vertex] = static_cast<VertexId>(i);
    }
    TreeDecomposition td;
    std::vector<VertexId> nodes;
    std::vector<Graph::Edge> edges;
    std::vector<VertexId> roots;
    for (std::size_t i = 0; i < red.steps.size(); ++i) {
        const auto& step = red.steps[i];
        const auto node = static_cast<VertexId>(i);
        nodes.push_back(node);
        VertexSet bag{step.vertex};
        bag.insert(step.neighbors.begin(), step.neighbors.end());
        td.bags[node] = std::move(bag);
        if (step.neighbors.empty()) {
            roots.push_back(node);
            continue;
        }
        VertexId up = node_of.at(step.neighbors.front());
        for (VertexId u : step.neighbors) {
            up = std::min(up, node_of.at(u));
        }
        edges.emplace_back(node, up);
    }
    for (std::size_t j = 1; j < roots.size(); ++j) {
        edges.emplace_back(roots[0], roots[j]);
    }
    td.tree = Graph(std::move(nodes), edges);
    return td;
}

VertexSet tw2_separator(const Graph& g, const Weighting& w) {
    const auto td = tw2_decomposition(g);
    if (!w.covers(g)) {
        throw PreconditionError("weighting domain differs from the vertex set of the graph");
    }
    for (const auto& [_, bag] : td.bags) {
        if (is_balanced_separator(g, w, bag)) {
            return bag;
        }
    }
    if (g.empty()) {
        return {};
    }
    throw InternalError("no bag of the width-2 decomposition is balanced");
}

SiblingReduction identify_siblings(const Graph& g, const Weighting& w, const VertexSet& protect) {
    if (!w.covers(g)) {
        throw PreconditionError("weighting domain differs from the vertex set of the graph");
    }
    if (!w.normal()) {
        throw PreconditionError("weighting is not normal");
    }
    const VertexSet loose = set_minus(g.vertex_set(), protect);
    for (VertexId u : loose) {
        for (VertexId x : g.neighbors(u)) {
            if (loose.count(x)) {
                throw PreconditionError("unprotected vertices are not independent");
            }
        }
    }
    auto values = w.values();
    VertexSet alive = loose;
    SiblingReduction out;
    auto inside = [&](VertexId u, VertexId v) {
        const auto& a = g.neighbors(u);
        const auto& b = g.neighbors(v);
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    for (bool merged = true; merged;) {
        merged = false;
        for (VertexId u : alive) {
            for (VertexId v : alive) {
                if (u != v && inside(u, v)) {
                    values[v] += values[u];
                    values.erase(u);
                    alive.erase(u);
                    out.log.push_back({u, v});
                    if (2 * values[v] > 1) {
                        out.heavy_vertex = v;
                    }
                    merged = true;
                    break;
                }
            }
            if (merged) {
                break;
            }
        }
        if (out.heavy_vertex) {
            break;
        }
    }
    VertexSet removed;
    for (const auto& m : out.log) {
        removed.insert(m.removed);
    }
    out.graph = g.without(removed);
    out.weights = Weighting(std::move(values));
    return out;
}

namespace {

std::optional<VertexSet> heavy_of(const Graph& g, const Weighting& w, const VertexSet& s) {
    for (auto& comp : components_without(g, s)) {
        if (w.heavy(comp)) {
            return std::move(comp);
        }
    }
    return std::nullopt;
}

VertexSet outside_of_degree_two(const Graph& g, const VertexSet& cycle_vertices) {
    VertexSet out;
    for (VertexId v : g.vertices()) {
        if (!cycle_vertices.count(v) && g.degree(v) >= 2) {
            out.insert(v);
        }
    }
    return out;
}

} // namespace

VertexSet extend_by_tree_vertex(const Graph& g, const Weighting& w, const VertexSet& x,
                                const VertexSet& cycle_vertices) {
    auto b = heavy_of(g, w, x);
    if (!b) {
        throw PreconditionError("x is already balanced");
    }
    if (intersects(*b, outside_of_degree_two(g, cycle_vertices))) {
        throw PreconditionError("heavy component contains an off-cycle vertex of degree >= 2");
    }
    const Graph tree = g.induced(*b);
    if (!is_tree(tree)) {
        throw PreconditionError("heavy component is not a tree");
    }
    VertexId t = tree_balanced_vertex(tree, w.restricted(*b));
    if (!cycle_vertices.count(t)) {
        t = g.neighbors(t).front();
    }
    VertexSet out = x;
    out.insert(t);
    if (!is_balanced_separator(g, w, out)) {
        throw InternalError("extension by tree vertex " + std::to_string(t) + " is not balanced");
    }
    return out;
}

namespace {

PipelineResult certified(const Graph& g, const Weighting& w, SeparatorCertificate cert, int ell) {
    const auto report = verify_certificate(g, w, cert, ell);
    if (!report.passed()) {
        throw InternalError("certificate via route " + std::string(route_name(cert.route)) + " failed:\n" +
                            report.summary());
    }
    return PipelineResult{std::move(cert)};
}

PipelineResult modelled(const Graph& g, InducedMinorWitness witness) {
    if (!verify_model(g, witness)) {
        throw InternalError("witness failed to verify");
    }
    return PipelineResult{std::move(witness)};
}

PipelineResult small(const Graph& g, const Weighting& w, VertexSet s, std::size_t bound, int ell) {
    return certified(g, w, SeparatorCertificate{std::move(s), Route::CycleSmall, std::nullopt, bound}, ell);
}

// The cobweb part of the cycle argument, on the sibling-free graph gs.
class CobwebStage {
  public:
    CobwebStage(const Graph& g, const Weighting& w, const Graph& gs, const Weighting& ws, const VertexSequence& c,
                int ell)
        : g_(g), w_(w), gs_(gs), ws_(ws), c_(c), on_cycle_(c.begin(), c.end()), ell_(ell),
          bound_(static_cast<std::size_t>(ell - 1)) {}

    PipelineResult run() {
        const VertexSet inner = outside_of_degree_two(gs_, on_cycle_);
        for (VertexId v : inner) {
            if (gs_.degree(v) >= bound_ + 1) {
                return modelled(g_, wheel_witness_from_component(g_, c_, {v}, bound_ + 1));
            }
        }
        try {
            cw_ = validate_cobweb(gs_.induced(set_union(on_cycle_, inner)), c_, inner);
        } catch (const PreconditionError& e) {
            throw InternalError(std::string("sibling-free graph is not a cobweb: ") + e.what());
        }

        std::map<VertexId, std::vector<Wedge>> wedges;
        for (VertexId v : inner) {
            wedges[v] = wedges_anchored(cw_, v);
            for (const Wedge& wedge : wedges[v]) {
                if (is_trivial(wedge) || is_co_trivial(cw_, wedge)) {
                    continue;
                }
                if (barrier(cw_, wedge).size() >= bound_ + 1) {
                    return modelled(g_, barrier_wheel(wedge));
                }
            }
        }

        for (VertexId v : inner) {
            VertexSet s;
            for (const Wedge& wedge : wedges[v]) {
                const VertexSet b = barrier(cw_, wedge);
                s.insert(b.begin(), b.end());
            }
            auto heavy = heavy_of(gs_, ws_, s);
            if (!heavy) {
                return small(g_, w_, s, bound_ * bound_, ell_);
            }
            select_wedge(v, wedges[v], *heavy);
        }

        const VertexSet good = good_vertices(sel_);
        const std::vector<VertexId> gv(good.begin(), good.end());
        SegmentSelection sigma;
        std::map<VertexSet, VertexSet> heavy_by_set;
        std::vector<VertexSet> sets;
        for (std::size_t i = 0; i < gv.size(); ++i) {
            sets.push_back({gv[i]});
            for (std::size_t j = i + 1; j < gv.size(); ++j) {
                sets.push_back({gv[i], gv[j]});
                for (std::size_t k = j + 1; k < gv.size(); ++k) {
                    sets.push_back({gv[i], gv[j], gv[k]});
                }
            }
        }
        for (const VertexSet& t : sets) {
            VertexSet s;
            for (VertexId u : t) {
                const VertexSet b = barrier(cw_, sel_.at(u));
                s.insert(b.begin(), b.end());
            }
            auto heavy = heavy_of(gs_, ws_, s);
            if (!heavy) {
                return small(g_, w_, s, 3 * bound_, ell_);
            }
            sigma[t] = segment_of(t, *heavy);
            heavy_by_set[t] = std::move(*heavy);
        }

        SeparatingPair pair;
        try {
            pair = separating_good_pair(cw_, sel_, sigma);
        } catch (const PreconditionError& e) {
            throw InternalError(std::string("segment selection: ") + e.what());
        }
        const VertexSet key = pair.u == pair.v ? VertexSet{pair.u} : VertexSet{pair.u, pair.v};
        if (intersects(heavy_by_set.at(key), inner)) {
            throw InternalError("heavy component of the separating pair " + to_string(key) +
                                " contains a vertex of I");
        }
        return small(g_, w_, extend_by_tree_vertex(gs_, ws_, pair.separator, on_cycle_), 2 * bound_ + 1, ell_);
    }

  private:
    // Contracting the part of the graph beyond the wedge yields a hub seeing
    // the whole barrier.
    InducedMinorWitness barrier_wheel(const Wedge& wedge) const {
        VertexSequence cycle = wedge.arc;
        cycle.push_back(wedge.anchor);
        const VertexSet on_wedge(cycle.begin(), cycle.end());
        for (const VertexSet& comp : components_without(g_, on_wedge)) {
            if (intersects(comp, on_cycle_)) {
                return wheel_witness_from_component(g_, cycle, comp, bound_ + 1);
            }
        }
        throw InternalError("wedge covers the whole cycle");
    }

    void select_wedge(VertexId v, const std::vector<Wedge>& candidates, const VertexSet& heavy) {
        const VertexSet on_c = set_intersection(heavy, on_cycle_);
        const Wedge* chosen = nullptr;
        for (const Wedge& wedge : candidates) {
            if (is_subset(on_c, arc_vertices(wedge))) {
                if (chosen) {
                    throw InternalError("two wedges at " + std::to_string(v) + " contain the heavy component");
                }
                chosen = &wedge;
            }
        }
        if (!chosen) {
            throw InternalError("no wedge at " + std::to_string(v) + " contains the heavy component " +
                                to_string(heavy));
        }
        const VertexSet b = barrier(cw_, *chosen);
        bool component = false;
        for (const VertexSet& comp : components_without(gs_, b)) {
            component = component || comp == heavy;
        }
        if (!component) {
            throw InternalError("heavy component at " + std::to_string(v) + " is not a component of G - barrier");
        }
        sel_[v] = *chosen;
    }

    VertexSequence segment_of(const VertexSet& t, const VertexSet& heavy) const {
        const VertexSet on_c = set_intersection(heavy, on_cycle_);
        std::optional<VertexSequence> found;
        for (const auto& comp : intersection_components(cw_, sel_, t)) {
            if (is_subset(on_c, VertexSet(comp.begin(), comp.end()))) {
                found = comp;
            }
        }
        if (on_c.empty() || !found) {
            throw InternalError("heavy component of " + to_string(t) + " is not inside one segment");
        }
        return *found;
    }

    const Graph& g_;
    const Weighting& w_;
    const Graph& gs_;
    const Weighting& ws_;
    const VertexSequence& c_;
    const VertexSet on_cycle_;
    const int ell_;
    const std::size_t bound_; // ell - 1
    Cobweb cw_;
    WedgeSelection sel_;
};

} // namespace

PipelineResult no_big_components(const Graph& g, const Weighting& w, const VertexSequence& c, int ell) {
    if (ell < 4) {
        throw PreconditionError("ell must be at least 4");
    }
    if (!w.covers(g) || !w.normal()) {
        throw PreconditionError("weighting must be normal on the graph");
    }
    if (!is_connected(g)) {
        throw PreconditionError("graph is disconnected");
    }
    if (c.size() < 4 || !is_induced_cycle(g, c)) {
        throw PreconditionError("cycle must be induced of length at least 4");
    }
    const VertexSet on_cycle(c.begin(), c.end());
    const VertexSet outside = set_minus(g.vertex_set(), on_cycle);
    for (VertexId v : outside) {
        for (VertexId u : g.neighbors(v)) {
            if (outside.count(u)) {
                throw PreconditionError("vertices off the cycle are not independent");
            }
        }
        if (2 * w.at(v) > 1) {
            throw PreconditionError("vertex off the cycle weighs more than 1/2");
        }
    }

    if (outside_of_degree_two(g, on_cycle).empty()) {
        VertexSet x{*on_cycle.begin()};
        if (!is_balanced_separator(g, w, x)) {
            x = extend_by_tree_vertex(g, w, x, on_cycle);
        }
        return small(g, w, std::move(x), 2, ell);
    }

    const SiblingReduction sib = identify_siblings(g, w, on_cycle);
    if (sib.heavy_vertex) {
        const VertexId v = *sib.heavy_vertex;
        if (g.degree(v) >= static_cast<std::size_t>(ell)) {
            return modelled(g, wheel_witness_from_component(g, c, {v}, static_cast<std::size_t>(ell)));
        }
        const auto& nb = g.neighbors(v);
        return small(g, w, VertexSet(nb.begin(), nb.end()), static_cast<std::size_t>(ell - 1), ell);
    }
    return CobwebStage(g, w, sib.graph, sib.weights, c, ell).run();
}

namespace {

struct HeavyPart {
    Graph graph;
    Weighting weights; // normal on graph
};

// The heavy component of g with its renormalised weighting, if there is one.
std::optional<HeavyPart> heavy_part(const Graph& g, const Weighting& w) {
    if (w.trivial()) {
        return std::nullopt;
    }
    auto comp = heavy_of(g, w, {});
    if (!comp) {
        return std::nullopt;
    }
    return HeavyPart{g.induced(*comp), normalize(w.restricted(*comp))};
}

void require_covered(const Graph& g, const Weighting& w) {
    if (!w.covers(g)) {
        throw PreconditionError("weighting domain differs from the vertex set of the graph");
    }
}

PipelineResult dominated(const Graph& g, const Weighting& w, const Graph& h, VertexSet dom, Route route,
                         int ell) {
    SeparatorCertificate cert{closed_neighborhood(h, dom), route, std::move(dom), std::nullopt};
    return certified(g, w, std::move(cert), ell);
}

} // namespace

PipelineResult separator(const Graph& g, const Weighting& w, int ell) {
    if (ell < 3) {
        throw PreconditionError("ell must be at least 3");
    }
    require_covered(g, w);
    auto part = heavy_part(g, w);
    if (!part) {
        return certified(g, w, SeparatorCertificate{}, ell);
    }
    const Graph& h = part->graph;
    const Weighting& wh = part->weights;
    const auto size = static_cast<std::size_t>(ell);

    if (ell == 3) {
        if (k4_minor_free(h)) {
            return certified(g, w, SeparatorCertificate{tw2_separator(h, wh), Route::Tw2, std::nullopt, 3}, ell);
        }
        return modelled(g, k4_witness(h));
    }

    const CycleOrPair found = cycle_plus_vertex(h, wh);
    if (const auto* pair = std::get_if<PairVariant>(&found)) {
        return dominated(g, w, h, {pair->p, pair->q}, Route::TwoVertices, ell);
    }
    const auto& cyc = std::get<CycleVariant>(found);
    const VertexSet on_cycle(cyc.cycle.begin(), cyc.cycle.end());
    if (auto b = heavy_of(h, wh, on_cycle)) {
        const VertexSet nb = open_neighborhood(h, *b);
        if (nb.size() >= size) {
            return modelled(g, wheel_witness_from_component(h, cyc.cycle, *b, size));
        }
        VertexSet dom = nb;
        VertexSet y;
        if (cyc.p) {
            dom.insert(*cyc.p);
            y = closed_neighborhood(h, {*cyc.p});
        }
        const VertexSet thin = thin_separator(h, wh, closed_neighborhood(h, on_cycle), y, on_cycle);
        if (!is_subset(thin, closed_neighborhood(h, dom))) {
            throw InternalError("thinned separator escapes N[N(B) ∪ {p}]");
        }
        return dominated(g, w, h, std::move(dom), Route::NeighborBound, ell);
    }

    const ContractionMap cm = contract_components(h, on_cycle);
    std::map<VertexId, Rational> moved;
    for (const auto& [x, fiber] : cm.fibers) {
        moved[x] = wh.weight(fiber);
    }
    PipelineResult inner = no_big_components(cm.image, Weighting(std::move(moved)), cyc.cycle, ell);
    if (!inner.is_certificate()) {
        return modelled(g, lift_witness(inner.witness(), cm));
    }
    return certified(g, w, inner.certificate(), ell);
}

PipelineResult fan_separator(const Graph& g, const Weighting& w, int ell) {
    if (ell < 2) {
        throw PreconditionError("ell must be at least 2");
    }
    require_covered(g, w);
    auto part = heavy_part(g, w);
    if (!part) {
        return certified(g, w, SeparatorCertificate{}, ell);
    }
    const Graph& h = part->graph;
    const Weighting& wh = part->weights;
    const VertexSequence path = gyarfas_path(h, wh);
    if (path.size() <= 2) {
        return dominated(g, w, h, VertexSet(path.begin(), path.end()), Route::FanDominated, ell);
    }
    const VertexId last = path.back();
    const VertexSequence q(path.begin(), path.end() - 1);
    const VertexSet on_q(q.begin(), q.end());
    auto b = heavy_of(h, wh, on_q);
    if (!b) {
        throw InternalError("path prefix " + to_string(q) + " is balanced");
    }
    const VertexSet nb = open_neighborhood(h, *b);
    if (nb.size() >= static_cast<std::size_t>(ell)) {
        return modelled(g, fan_witness(h, q, *b, static_cast<std::size_t>(ell)));
    }
    VertexSet dom = nb;
    dom.insert(last);
    const VertexSet thin =
        thin_separator(h, wh, closed_neighborhood(h, on_q), closed_neighborhood(h, {last}), on_q);
    if (!is_subset(thin, closed_neighborhood(h, dom))) {
        throw InternalError("thinned separator escapes N[N(B) ∪ {p}]");
    }
    return dominated(g, w, h, std::move(dom), Route::FanDominated, ell);
}

} // namespace wheelsep
