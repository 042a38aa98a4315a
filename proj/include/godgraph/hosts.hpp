#pragma once

#include <string>
#include <utility>
#include <vector>

namespace godgraph {

// An undirected simple host graph on vertices 0..n-1.
struct HostGraph {
  std::string name;
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

HostGraph host_complete(int n);
HostGraph host_path(int n);
HostGraph host_cycle(int n);
// Center 0 plus n-1 leaves.
HostGraph host_star(int n);
// Hub 0 plus an (n-1)-cycle rim; n >= 3 (wheel on 4 vertices is K4).
HostGraph host_wheel(int n);
// K_{2,2,2}: a 4-cycle with two apexes joined to all of it.
HostGraph host_octahedron();
// width x height lattice, index r*width + c.
HostGraph host_grid(int width, int height);
// The two triangulated 8-vertex strips with 16 edges each.
HostGraph host_moebius8();
HostGraph host_cylinder8();
HostGraph host_custom(const std::vector<std::pair<int, int>>& edges);

std::vector<std::vector<int>> host_adjacency(const HostGraph& h);
// All-pairs shortest-path distances (BFS per vertex).
std::vector<std::vector<int>> host_distance_matrix(const HostGraph& h);
bool host_connected(const HostGraph& h);

// Parses the host part of a family spec, e.g. {"cycle","6"}, {"grid","3x2"},
// {"octahedron"}, {"custom","1-2,2-3,3-1"} (1-based endpoints).
HostGraph parse_host(const std::vector<std::string>& tokens);

}  // namespace godgraph
