#ifndef WALLCUBE_GRAPH_HPP
#define WALLCUBE_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

namespace wallcube {

/// Plain undirected graph on vertices 0..n-1. Loops and parallel edges are
/// stored as given so the verifiers can reject them.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count, std::vector<std::string> names = {});

  static Graph from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges,
                          std::vector<std::string> names = {});

  void add_edge(int u, int v);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<int>& neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;

  /// Display name, falling back to the index.
  std::string name(int v) const;
  const std::vector<std::string>& names() const { return names_; }

  bool is_simplicial() const;
  bool is_connected() const;

 private:
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::string> names_;
};

/// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

using DistanceMatrix = std::vector<std::vector<int>>;
DistanceMatrix all_pairs_distances(const Graph& g);

}  // namespace wallcube

#endif  // WALLCUBE_GRAPH_HPP
