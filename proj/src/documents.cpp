// Copyright (c) wheelsep contributors.
// SPDX-License-Identifier: Apache-2.0
#include "wheelsep/documents.hpp"

#include <json.hpp>
#include <limits>
#include <sstream>

#include "wheelsep/error.hpp"

namespace wheelsep {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& what) {
    throw DocumentError("field '" + field + "': " + what);
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw DocumentError(std::string("malformed JSON: ") + e.what());
    }
}

const json& member(const json& obj, const std::string& key) {
    if (!obj.is_object()) {
        throw DocumentError("document must be a JSON object");
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
        bad(key, "missing");
    }
    return *it;
}

VertexId to_id(const json& j, const std::string& field) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0 ||
        j.get<std::int64_t>() > std::numeric_limits<VertexId>::max() / 2) {
        bad(field, "expected a nonnegative vertex id");
    }
    return static_cast<VertexId>(j.get<std::int64_t>());
}

VertexId key_to_id(const std::string& key, const std::string& field) {
    if (key.empty() || key.size() > 9 || key.find_first_not_of("0123456789") != std::string::npos) {
        bad(field, "key \"" + key + "\" is not a vertex id");
    }
    return static_cast<VertexId>(std::stoul(key));
}

std::vector<VertexId> to_ids(const json& j, const std::string& field) {
    if (!j.is_array()) {
        bad(field, "expected an array of vertex ids");
    }
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(to_id(j[i], field + "[" + std::to_string(i) + "]"));
    }
    return out;
}

VertexSet to_id_set(const json& j, const std::string& field) {
    const auto ids = to_ids(j, field);
    VertexSet out(ids.begin(), ids.end());
    if (out.size() != ids.size()) {
        bad(field, "repeated vertex");
    }
    return out;
}

Graph to_graph(const json& obj, const std::string& prefix) {
    auto vertices = to_ids(member(obj, "vertices"), prefix + "vertices");
    const json& edges = member(obj, "edges");
    if (!edges.is_array()) {
        bad(prefix + "edges", "expected an array of pairs");
    }
    std::vector<Graph::Edge> es;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string field = prefix + "edges[" + std::to_string(i) + "]";
        if (!edges[i].is_array() || edges[i].size() != 2) {
            bad(field, "expected a pair of vertex ids");
        }
        es.emplace_back(to_id(edges[i][0], field), to_id(edges[i][1], field));
    }
    try {
        return Graph(std::move(vertices), es);
    } catch (const PreconditionError& e) {
        bad(prefix + "edges", e.what());
    }
}

json from_graph(const Graph& g) {
    json edges = json::array();
    for (const auto& [a, b] : g.edges()) {
        edges.push_back({a, b});
    }
    return json{{"vertices", g.vertices()}, {"edges", edges}};
}

json from_set(const VertexSet& s) { return json(std::vector<VertexId>(s.begin(), s.end())); }

std::string excluded_name(Excluded e) { return e == Excluded::Wheel ? "wheel" : "fan"; }

} // namespace

GraphDocument parse_graph_document(const std::string& text) {
    const json doc = parse_text(text);
    GraphDocument out;
    out.graph = to_graph(doc, "");
    if (doc.contains("weights")) {
        const json& ws = doc["weights"];
        if (!ws.is_object()) {
            bad("weights", "expected an object of \"p/q\" strings");
        }
        std::map<VertexId, Rational> values;
        for (auto it = ws.begin(); it != ws.end(); ++it) {
            const std::string field = "weights." + it.key();
            const VertexId v = key_to_id(it.key(), field);
            if (!out.graph.contains(v)) {
                bad(field, "unknown vertex");
            }
            if (!it->is_string()) {
                bad(field, "expected a \"p/q\" string");
            }
            try {
                values[v] = parse_rational(it->get<std::string>(), true);
            } catch (const PreconditionError& e) {
                bad(field, e.what());
            }
        }
        for (VertexId v : out.graph.vertices()) {
            if (!values.count(v)) {
                bad("weights", "no weight for vertex " + std::to_string(v));
            }
        }
        out.weights = Weighting(std::move(values));
    }
    if (doc.contains("cycle")) {
        out.cycle = to_ids(doc["cycle"], "cycle");
        for (VertexId v : *out.cycle) {
            if (!out.graph.contains(v)) {
                bad("cycle", "unknown vertex " + std::to_string(v));
            }
        }
    }
    return out;
}

std::string serialize_graph_document(const GraphDocument& doc) {
    json out = from_graph(doc.graph);
    if (doc.weights) {
        json ws = json::object();
        for (const auto& [v, r] : doc.weights->values()) {
            ws[std::to_string(v)] = to_string(r);
        }
        out["weights"] = ws;
    }
    if (doc.cycle) {
        out["cycle"] = *doc.cycle;
    }
    return out.dump(2) + "\n";
}

bool operator==(const ResultDocument& a, const ResultDocument& b) {
    return a.ell == b.ell && a.excluded == b.excluded && a.result.value == b.result.value;
}

ResultDocument parse_result_document(const std::string& text) {
    const json doc = parse_text(text);
    ResultDocument out;
    const json& ell = member(doc, "ell");
    if (!ell.is_number_integer() || ell.get<std::int64_t>() < 0 || ell.get<std::int64_t>() > 1000000) {
        bad("ell", "expected a small nonnegative integer");
    }
    out.ell = static_cast<int>(ell.get<std::int64_t>());
    const json& excluded = member(doc, "excluded");
    if (excluded == "wheel") {
        out.excluded = Excluded::Wheel;
    } else if (excluded == "fan") {
        out.excluded = Excluded::Fan;
    } else {
        bad("excluded", "expected \"wheel\" or \"fan\"");
    }

    const json& kind = member(doc, "kind");
    if (kind == "certificate") {
        SeparatorCertificate cert;
        const json& route = member(doc, "route");
        auto parsed = route.is_string() ? parse_route(route.get<std::string>()) : std::nullopt;
        if (!parsed) {
            bad("route", "unknown route");
        }
        cert.route = *parsed;
        cert.separator = to_id_set(member(doc, "separator"), "separator");
        if (doc.contains("dominators")) {
            cert.dominators = to_id_set(doc["dominators"], "dominators");
        }
        if (doc.contains("size_bound")) {
            const json& b = doc["size_bound"];
            if (!b.is_number_integer() || b.get<std::int64_t>() < 0) {
                bad("size_bound", "expected a nonnegative integer");
            }
            cert.size_bound = static_cast<std::size_t>(b.get<std::int64_t>());
        }
        out.result = PipelineResult{std::move(cert)};
    } else if (kind == "witness") {
        InducedMinorWitness w;
        w.pattern = to_graph(member(doc, "pattern"), "pattern.");
        const json& sets = member(doc, "branch_sets");
        if (!sets.is_object()) {
            bad("branch_sets", "expected an object");
        }
        for (auto it = sets.begin(); it != sets.end(); ++it) {
            const std::string field = "branch_sets." + it.key();
            w.branch_sets[key_to_id(it.key(), field)] = to_id_set(*it, field);
        }
        out.result = PipelineResult{std::move(w)};
    } else {
        bad("kind", "expected \"certificate\" or \"witness\"");
    }
    return out;
}

std::string serialize_result_document(const ResultDocument& doc) {
    json out{{"ell", doc.ell}, {"excluded", excluded_name(doc.excluded)}};
    if (doc.result.is_certificate()) {
        const auto& cert = doc.result.certificate();
        out["kind"] = "certificate";
        out["route"] = std::string(route_name(cert.route));
        out["separator"] = from_set(cert.separator);
        if (cert.dominators) {
            out["dominators"] = from_set(*cert.dominators);
        }
        if (cert.size_bound) {
            out["size_bound"] = *cert.size_bound;
        }
    } else {
        const auto& w = doc.result.witness();
        out["kind"] = "witness";
        out["pattern"] = from_graph(w.pattern);
        json sets = json::object();
        for (const auto& [p, set] : w.branch_sets) {
            sets[std::to_string(p)] = from_set(set);
        }
        out["branch_sets"] = sets;
    }
    return out.dump(2) + "\n";
}

std::string to_dot(const Graph& g, const ResultDocument* highlight) {
    std::map<VertexId, std::vector<std::string>> attrs;
    if (highlight && highlight->result.is_certificate()) {
        const auto& cert = highlight->result.certificate();
        for (VertexId v : cert.separator) {
            attrs[v].push_back("shape=doublecircle");
        }
        if (cert.dominators) {
            for (VertexId v : *cert.dominators) {
                attrs[v].push_back("style=filled");
                attrs[v].push_back("fillcolor=gray");
            }
        }
    } else if (highlight) {
        for (const auto& [p, set] : highlight->result.witness().branch_sets) {
            for (VertexId v : set) {
                attrs[v].push_back("label=\"" + std::to_string(v) + "/" + std::to_string(p) + "\"");
            }
        }
    }
    std::ostringstream os;
    os << "graph wheelsep {\n";
    for (VertexId v : g.vertices()) {
        os << "  " << v;
        auto it = attrs.find(v);
        if (it != attrs.end()) {
            os << " [";
            for (std::size_t i = 0; i < it->second.size(); ++i) {
                os << (i ? ", " : "") << it->second[i];
            }
            os << "]";
        }
        os << ";\n";
    }
    for (const auto& [a, b] : g.edges()) {
        os << "  " << a << " -- " << b << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace wheelsep
