#pragma once

#include <iosfwd>
#include <string>

#include "godgraph/graph.hpp"

namespace godgraph {

enum class ExportFormat { json, dot, csv_edges };

ExportFormat parse_export_format(const std::string& name);

// JSON schema:
//   {"start": id, "players": n,
//    "vertices": [{"id": int, "owner": int|-1, "terminal": bool,
//                  "win": bool, "label": string?}, ...],
//    "edges": [[u, v], ...]}   (edges sorted lexicographically)
std::string graph_to_json(const GameGraph& g);
GameGraph graph_from_json(const std::string& text);
GameGraph load_graph_json(const std::string& path);

// DOT: win vertices get shape=doublecircle; owners map to a color class.
std::string graph_to_dot(const GameGraph& g);

// One "u,v" line per arc, sorted lexicographically.
std::string graph_to_csv_edges(const GameGraph& g);

std::string export_graph(const GameGraph& g, ExportFormat fmt);

}  // namespace godgraph
