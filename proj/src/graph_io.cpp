#include "godgraph/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace godgraph {

using nlohmann::json;

ExportFormat parse_export_format(const std::string& name) {
  if (name == "json") return ExportFormat::json;
  if (name == "dot") return ExportFormat::dot;
  if (name == "csv-edges" || name == "csv") return ExportFormat::csv_edges;
  throw SpecError("unknown export format: " + name);
}

namespace {

std::vector<std::pair<Vertex, Vertex>> sorted_edges(const GameGraph& g) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(g.arc_count());
  for (std::size_t u = 0; u < g.out.size(); ++u)
    for (const Vertex v : g.out[u]) edges.emplace_back(static_cast<Vertex>(u), v);
  std::sort(edges.begin(), edges.end());
  return edges;
}

// Labels may hold arbitrary state bytes; escape them for text formats.
std::string printable_label(const std::string& raw) {
  bool plain = !raw.empty();
  for (const char c : raw)
    if (static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) >= 0x7f) {
      plain = false;
      break;
    }
  if (plain) return raw;
  static const char* hex = "0123456789abcdef";
  std::string s = "0x";
  for (const char c : raw) {
    s.push_back(hex[(static_cast<unsigned char>(c) >> 4) & 0xf]);
    s.push_back(hex[static_cast<unsigned char>(c) & 0xf]);
  }
  return s;
}

}  // namespace

std::string graph_to_json(const GameGraph& g) {
  json doc;
  doc["start"] = g.start;
  doc["players"] = g.players;
  json verts = json::array();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    json jv;
    jv["id"] = static_cast<Vertex>(v);
    jv["owner"] = static_cast<int>(g.owner[v]);
    jv["terminal"] = g.terminal[v] != 0;
    jv["win"] = g.win[v] != 0;
    if (g.has_labels()) jv["label"] = printable_label(g.label[v]);
    verts.push_back(std::move(jv));
  }
  doc["vertices"] = std::move(verts);
  json edges = json::array();
  for (const auto& [u, v] : sorted_edges(g)) edges.push_back(json::array({u, v}));
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

GameGraph graph_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw SpecError(std::string("bad graph JSON: ") + e.what());
  }
  if (!doc.contains("vertices") || !doc.contains("edges"))
    throw SpecError("graph JSON needs \"vertices\" and \"edges\"");
  GameGraph g;
  g.players = doc.value("players", 0);
  const auto& verts = doc["vertices"];
  bool any_label = false;
  for (const auto& jv : verts)
    if (jv.contains("label")) any_label = true;
  std::vector<char> seen;
  seen.resize(verts.size(), 0);
  // Vertices must carry dense ids 0..N-1; accept any listing order.
  std::vector<int> owners(verts.size(), kSolitaire);
  std::vector<char> wins(verts.size(), 0);
  std::vector<std::string> labels(verts.size());
  for (const auto& jv : verts) {
    if (!jv.contains("id")) throw SpecError("vertex without id in graph JSON");
    const std::int64_t id = jv["id"].get<std::int64_t>();
    if (id < 0 || id >= static_cast<std::int64_t>(verts.size()) || seen[static_cast<std::size_t>(id)])
      throw SpecError("vertex ids must be dense 0..N-1");
    seen[static_cast<std::size_t>(id)] = 1;
    owners[static_cast<std::size_t>(id)] = jv.value("owner", kSolitaire);
    wins[static_cast<std::size_t>(id)] = jv.value("win", false) ? 1 : 0;
    if (jv.contains("label")) labels[static_cast<std::size_t>(id)] = jv["label"].get<std::string>();
  }
  for (std::size_t i = 0; i < verts.size(); ++i)
    g.add_vertex(owners[i], any_label ? labels[i] : std::string());
  if (any_label && g.label.empty()) g.label.resize(g.vertex_count());
  for (const auto& je : doc["edges"]) {
    if (!je.is_array() || je.size() != 2) throw SpecError("edges must be [u,v] pairs");
    const std::int64_t u = je[0].get<std::int64_t>();
    const std::int64_t v = je[1].get<std::int64_t>();
    if (u < 0 || v < 0 || u >= static_cast<std::int64_t>(g.vertex_count()) ||
        v >= static_cast<std::int64_t>(g.vertex_count()))
      throw SpecError("edge endpoint out of range");
    if (u == v) throw SpecError("self-loops are not allowed");
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  g.start = doc.value("start", 0);
  if (g.start < 0 || static_cast<std::size_t>(g.start) >= g.vertex_count())
    throw SpecError("start vertex out of range");
  g.freeze();
  // Alternation graphs need win vertices to be sinks; solitaire win sets are
  // plain distance targets and may keep outgoing moves.
  if (g.players >= 2)
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if (wins[v] && !g.terminal[v])
        throw SpecError("win vertex " + std::to_string(v) + " is not terminal");
  for (std::size_t v = 0; v < g.vertex_count(); ++v) g.win[v] = wins[v];
  return g;
}

GameGraph load_graph_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open graph file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return graph_from_json(buf.str());
}

std::string graph_to_dot(const GameGraph& g) {
  static const char* colors[] = {"lightblue", "lightsalmon", "palegreen", "gold",
                                 "plum", "lightcyan", "wheat", "mistyrose"};
  std::ostringstream os;
  os << "digraph game {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    os << "  v" << v << " [";
    if (g.win[v]) os << "shape=doublecircle,";
    if (g.owner[v] != kSolitaire)
      os << "style=filled,fillcolor=" << colors[g.owner[v] % 8] << ",";
    os << "label=\"" << v;
    if (g.has_labels() && !g.label[v].empty()) os << ": " << printable_label(g.label[v]);
    os << "\"];\n";
  }
  for (const auto& [u, v] : sorted_edges(g)) os << "  v" << u << " -> v" << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string graph_to_csv_edges(const GameGraph& g) {
  std::ostringstream os;
  for (const auto& [u, v] : sorted_edges(g)) os << u << "," << v << "\n";
  return os.str();
}

std::string export_graph(const GameGraph& g, ExportFormat fmt) {
  switch (fmt) {
    case ExportFormat::json: return graph_to_json(g);
    case ExportFormat::dot: return graph_to_dot(g);
    case ExportFormat::csv_edges: return graph_to_csv_edges(g);
  }
  throw SpecError("unreachable export format");
}

}  // namespace godgraph
