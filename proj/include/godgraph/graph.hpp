#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "godgraph/util.hpp"

namespace godgraph {

using Vertex = std::int32_t;

// Owner value for solitaire vertices; players are 0..n-1 otherwise.
inline constexpr int kSolitaire = -1;

// Maps canonical state bytes to dense vertex ids, in interning order.
class StateInterner {
 public:
  // Returns the existing id for `bytes`, or assigns the next dense id.
  Vertex intern(std::string_view bytes);
  std::optional<Vertex> lookup(std::string_view bytes) const;
  const std::string& key(Vertex v) const { return keys_.at(static_cast<std::size_t>(v)); }
  std::size_t size() const { return keys_.size(); }

 private:
  std::deque<std::string> keys_;  // deque: element addresses stay valid
  std::unordered_map<std::string_view, Vertex> ids_;
};

// A finite directed game graph. Vertices are dense 0..N-1; arcs are stored as
// out-adjacency. Undirected graphs are stored as two opposite arcs. Terminal
// flags (out-degree 0) are computed by freeze(); win is a subset of terminal.
struct GameGraph {
  int players = 0;  // 0 for a pure solitaire graph
  Vertex start = 0;
  std::vector<std::vector<Vertex>> out;
  std::vector<std::int16_t> owner;
  std::vector<char> win;
  std::vector<char> terminal;
  std::vector<std::string> label;  // empty when the graph carries no labels
  bool frozen = false;

  // Set by generators whose arcs always come in symmetric pairs.
  bool arcs_symmetric = false;
  // Set by Cayley-style generators; lets diameter() use one eccentricity.
  bool vertex_transitive_hint = false;

  Vertex add_vertex(int owner_value, std::string label_bytes = std::string());
  // Requires u != v; re-adding an existing arc is a no-op.
  void add_edge(Vertex u, Vertex v);
  void add_undirected_edge(Vertex u, Vertex v);
  void set_win(Vertex v, bool value = true);
  void freeze();

  std::size_t vertex_count() const { return out.size(); }
  std::size_t arc_count() const;
  bool has_labels() const { return !label.empty(); }
  std::vector<Vertex> win_vertices() const;
};

enum class Mode { forward, undirected };

struct BfsResult {
  std::vector<std::int32_t> dist;   // -1 for unreached vertices
  std::vector<std::int64_t> profile;  // sphere sizes from the root outward
};

// Adjacency as seen under `mode`; borrows g.out when possible.
class AdjacencyView {
 public:
  AdjacencyView(const GameGraph& g, Mode mode);
  const std::vector<Vertex>& operator[](Vertex v) const {
    return (*adj_)[static_cast<std::size_t>(v)];
  }
  std::size_t size() const { return adj_->size(); }

 private:
  const std::vector<std::vector<Vertex>>* adj_;
  std::vector<std::vector<Vertex>> storage_;
};

BfsResult bfs(const GameGraph& g, Vertex root, Mode mode);
BfsResult bfs_adj(const std::vector<std::vector<Vertex>>& adj, Vertex root);

// Multi-source BFS distances toward `targets` along reversed arcs, i.e. the
// distance from every vertex to its nearest target.
std::vector<std::int32_t> distances_to_set(const GameGraph& g, const std::vector<Vertex>& targets,
                                           Mode mode);

int eccentricity(const GameGraph& g, Vertex v, Mode mode);

// Connected components of the undirected closure, ordered by smallest
// contained vertex id; vertices within a component are ascending.
std::vector<std::vector<Vertex>> components(const GameGraph& g);

struct ComponentDiameters {
  std::vector<std::vector<Vertex>> comps;
  std::vector<int> diameter;
};

// Exact per-component diameters on the undirected closure.
ComponentDiameters component_diameters(const GameGraph& g);

// Largest finite pairwise distance. For a connected graph under the
// vertex-transitivity hint this is the root's eccentricity; otherwise the
// exact max over all sources (per component when disconnected).
int diameter(const GameGraph& g, Mode mode);

// Shortest cycle length of the undirected closure; 0 when acyclic.
// Parallel opposite arcs (u<->v) count as one undirected edge, not a 2-cycle.
int girth(const GameGraph& g);

}  // namespace godgraph
