// Copyright (c) wheelsep contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "wheelsep/generators.hpp"
#include "wheelsep/graph.hpp"
#include "wheelsep/pipeline.hpp"
#include "wheelsep/weights.hpp"

namespace wheelsep {

// Malformed input document; the message names the line or field at fault.
class DocumentError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// {"vertices": [..], "edges": [[u, v], ..], "weights": {"id": "p/q"}}.
// Without "weights" every vertex weighs 1. Cobweb documents add "cycle".
struct GraphDocument {
    Graph graph;
    std::optional<Weighting> weights;
    std::optional<VertexSequence> cycle;

    Weighting effective_weights() const { return weights ? *weights : Weighting::uniform(graph); }
    friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

GraphDocument parse_graph_document(const std::string& text);
std::string serialize_graph_document(const GraphDocument& doc);

// {"kind": "certificate", "ell", "excluded", "route", "separator",
// ["dominators"], ["size_bound"]} or {"kind": "witness", "ell", "excluded",
// "pattern": {"vertices", "edges"}, "branch_sets": {"p": [..]}}.
struct ResultDocument {
    int ell = 0;
    Excluded excluded = Excluded::Wheel;
    PipelineResult result;
};

bool operator==(const ResultDocument& a, const ResultDocument& b);

ResultDocument parse_result_document(const std::string& text);
std::string serialize_result_document(const ResultDocument& doc);

// Graphviz text. With a certificate, separator vertices are double circles
// and dominators are filled; with a witness, vertices are labelled by the
// pattern vertex of their branch set.
std::string to_dot(const Graph& g, const ResultDocument* highlight = nullptr);

} // namespace wheelsep
