#include "wallcube/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "wallcube/error.hpp"

namespace wallcube {

Graph::Graph(int vertex_count, std::vector<std::string> names)
    : adjacency_(static_cast<std::size_t>(vertex_count)), names_(std::move(names)) {
  if (!names_.empty() && static_cast<int>(names_.size()) != vertex_count)
    throw Error(ErrorKind::InvalidVertex, "graph::Graph", "name count does not match vertex count");
}

Graph Graph::from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges,
                        std::vector<std::string> names) {
  Graph g(vertex_count, std::move(names));
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  const int n = vertex_count();
  if (u < 0 || u >= n || v < 0 || v >= n)
    throw Error(ErrorKind::InvalidVertex, "graph::add_edge",
                "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
  adjacency_[static_cast<std::size_t>(u)].push_back(v);
  if (u != v) adjacency_[static_cast<std::size_t>(v)].push_back(u);
  edges_.emplace_back(u, v);
}

bool Graph::has_edge(int u, int v) const {
  const auto& nb = neighbors(u);
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

std::string Graph::name(int v) const {
  if (names_.empty()) return std::to_string(v);
  return names_[static_cast<std::size_t>(v)];
}

bool Graph::is_simplicial() const {
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges_) {
    if (u == v) return false;
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) return false;
  }
  return true;
}

bool Graph::is_connected() const {
  if (vertex_count() == 0) return true;
  const auto dist = bfs_distances(*this, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::deque<int> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix d;
  d.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) d.push_back(bfs_distances(g, v));
  return d;
}

}  // namespace wallcube
