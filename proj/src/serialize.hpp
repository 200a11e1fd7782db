// serialize.hpp - JSON and DOT interchange for graphs, labelings, bounds
// reports and solve results.
//
// Graph JSON:    {"kind", "m", "n", "num_vertices", "edges": [[u,v],...],
//                 "coords": [[spoke,page],...] | null}
// Labeling JSON: {"graph_ref": string|absent,
//                 "labels": [{"spoke","page","label"}...]} for graphs with
//                 book coordinates, {"vertex","label"} entries otherwise.
// Malformed input throws ParseError.
#pragma once

#include <string>

#include "bounds.hpp"
#include "graph.hpp"
#include "labeling.hpp"
#include "solver.hpp"

namespace radiobook {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

// A labeling file may omit vertices; the result then has kUnlabeled holes
// and validate() rejects it as malformed.
std::string labeling_to_json(const Graph& g, const Labeling& f);
Labeling labeling_from_json(const Graph& g, const std::string& text);

// Undirected DOT. Node labels are "s<spoke>p<page>" (or the vertex index
// without coordinates), with ":<label>" appended when a labeling is given.
std::string export_dot(const Graph& g, const Labeling* f = nullptr);

std::string validation_to_json(const ValidationReport& report);
std::string bounds_report_to_json(const BoundsReport& r);
std::string bounds_report_to_text(const BoundsReport& r);
std::string solve_result_to_json(const SolveResult& r, const Graph* g = nullptr);

}  // namespace radiobook
