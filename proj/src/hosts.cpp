#include "godgraph/hosts.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "godgraph/util.hpp"

namespace godgraph {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw SpecError(msg);
}

HostGraph make(std::string name, int n, std::vector<std::pair<int, int>> edges) {
  HostGraph h;
  h.name = std::move(name);
  h.n = n;
  for (auto& [a, b] : edges) {
    require(a != b, "host self-loop in " + h.name);
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  h.edges = std::move(edges);
  return h;
}

}  // namespace

HostGraph host_complete(int n) {
  require(n >= 2, "complete host needs n >= 2");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return make("complete:" + std::to_string(n), n, std::move(e));
}

HostGraph host_path(int n) {
  require(n >= 2, "path host needs n >= 2");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make("path:" + std::to_string(n), n, std::move(e));
}

HostGraph host_cycle(int n) {
  require(n >= 3, "cycle host needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(n - 1, 0);
  return make("cycle:" + std::to_string(n), n, std::move(e));
}

HostGraph host_star(int n) {
  require(n >= 2, "star host needs n >= 2");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return make("star:" + std::to_string(n), n, std::move(e));
}

HostGraph host_wheel(int n) {
  require(n >= 3, "wheel host needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  for (int i = 1; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  if (n > 3) e.emplace_back(n - 1, 1);
  return make("wheel:" + std::to_string(n), n, std::move(e));
}

HostGraph host_octahedron() {
  std::vector<std::pair<int, int>> e = {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                                        {0, 4}, {1, 4}, {2, 4}, {3, 4},
                                        {0, 5}, {1, 5}, {2, 5}, {3, 5}};
  return make("octahedron", 6, std::move(e));
}

HostGraph host_grid(int width, int height) {
  require(width >= 1 && height >= 1 && width * height >= 2, "grid host too small");
  std::vector<std::pair<int, int>> e;
  const auto at = [width](int r, int c) { return r * width + c; };
  for (int r = 0; r < height; ++r)
    for (int c = 0; c < width; ++c) {
      if (c + 1 < width) e.emplace_back(at(r, c), at(r, c + 1));
      if (r + 1 < height) e.emplace_back(at(r, c), at(r + 1, c));
    }
  return make("grid:" + std::to_string(width) + "x" + std::to_string(height), width * height,
              std::move(e));
}

HostGraph host_moebius8() {
  std::vector<std::pair<int, int>> e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6},
                                        {6, 7}, {7, 0}, {0, 4}, {4, 1}, {1, 5}, {5, 2},
                                        {2, 6}, {6, 3}, {3, 7}, {7, 4}};
  return make("moebius8", 8, std::move(e));
}

HostGraph host_cylinder8() {
  std::vector<std::pair<int, int>> e = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6},
                                        {6, 7}, {7, 4}, {0, 4}, {4, 1}, {1, 5}, {5, 2},
                                        {2, 6}, {6, 3}, {3, 7}, {7, 0}};
  return make("cylinder8", 8, std::move(e));
}

HostGraph host_custom(const std::vector<std::pair<int, int>>& edges) {
  require(!edges.empty(), "custom host needs edges");
  int n = 0;
  for (const auto& [a, b] : edges) {
    require(a >= 0 && b >= 0, "custom host edge endpoints must be nonnegative");
    n = std::max({n, a + 1, b + 1});
  }
  return make("custom", n, edges);
}

std::vector<std::vector<int>> host_adjacency(const HostGraph& h) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(h.n));
  for (const auto& [a, b] : h.edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  return adj;
}

std::vector<std::vector<int>> host_distance_matrix(const HostGraph& h) {
  const auto adj = host_adjacency(h);
  std::vector<std::vector<int>> d(static_cast<std::size_t>(h.n),
                                  std::vector<int>(static_cast<std::size_t>(h.n), -1));
  for (int s = 0; s < h.n; ++s) {
    auto& row = d[static_cast<std::size_t>(s)];
    row[static_cast<std::size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (const int v : adj[static_cast<std::size_t>(u)])
        if (row[static_cast<std::size_t>(v)] < 0) {
          row[static_cast<std::size_t>(v)] = row[static_cast<std::size_t>(u)] + 1;
          q.push(v);
        }
    }
  }
  return d;
}

bool host_connected(const HostGraph& h) {
  const auto d = host_distance_matrix(h);
  for (const int x : d[0])
    if (x < 0) return false;
  return true;
}

HostGraph parse_host(const std::vector<std::string>& tokens) {
  require(!tokens.empty(), "missing host name");
  const std::string& kind = tokens[0];
  const auto need_size = [&]() {
    require(tokens.size() >= 2, "host " + kind + " needs a size");
    return std::stoi(tokens[1]);
  };
  if (kind == "complete") return host_complete(need_size());
  if (kind == "path") return host_path(need_size());
  if (kind == "cycle") return host_cycle(need_size());
  if (kind == "star") return host_star(need_size());
  if (kind == "wheel") return host_wheel(need_size());
  if (kind == "octahedron") return host_octahedron();
  if (kind == "moebius8") return host_moebius8();
  if (kind == "cylinder8") return host_cylinder8();
  if (kind == "grid") {
    require(tokens.size() >= 2, "grid host needs WxH");
    const auto x = tokens[1].find('x');
    require(x != std::string::npos, "grid host needs WxH");
    return host_grid(std::stoi(tokens[1].substr(0, x)), std::stoi(tokens[1].substr(x + 1)));
  }
  if (kind == "custom") {
    require(tokens.size() >= 2, "custom host needs an edge list like 1-2,2-3");
    std::vector<std::pair<int, int>> edges;
    std::stringstream ss(tokens[1]);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto dash = item.find('-');
      require(dash != std::string::npos, "custom edge needs the form a-b");
      edges.emplace_back(std::stoi(item.substr(0, dash)) - 1, std::stoi(item.substr(dash + 1)) - 1);
    }
    return host_custom(edges);
  }
  throw SpecError("unknown host: " + kind);
}

}  // namespace godgraph
