#ifndef WALLCUBE_CUBULATION_HPP
#define WALLCUBE_CUBULATION_HPP

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wallcube/bits.hpp"
#include "wallcube/graph.hpp"
#include "wallcube/ultrafilter.hpp"
#include "wallcube/wallspace.hpp"

namespace wallcube {

struct LabeledEdge {
  int u;
  int v;
  int wall;

  friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

/// The 1-cubulation of a wall space: ultrafilters as vertices, single-wall
/// flips as edges, and the embedding x -> sigma_x.
///
/// Vertices are identified by their orientation bits. Principal ultrafilters
/// come first, in point order; the rest follow in BFS discovery order.
class MedianGraph {
 public:
  const SpacePtr& space() const { return space_; }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::vector<Mask>& vertices() const { return vertices_; }
  Mask bits(int v) const;
  Orientation vertex(int v) const { return {space_, bits(v)}; }
  std::optional<int> find(Mask bits) const;

  const std::vector<LabeledEdge>& edges() const { return edges_; }
  /// (neighbor, wall) pairs, ordered by wall.
  const std::vector<std::pair<int, int>>& neighbors(int v) const;

  int sigma(int x) const;
  const std::vector<int>& sigma() const { return sigma_; }
  /// The point x with sigma(x) = v, or -1 for non-principal vertices.
  int principal_point(int v) const;

  Graph underlying() const;

  void check_vertex(int v, const char* where) const;

 private:
  friend MedianGraph cubulate(const SpacePtr& space);

  SpacePtr space_;
  std::vector<Mask> vertices_;
  std::unordered_map<Mask, int> index_;
  std::vector<LabeledEdge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
  std::vector<int> sigma_;
  std::vector<int> principal_point_;
};

/// BFS from all principal ultrafilters, expanding by minimal-wall flips.
MedianGraph cubulate(const SpacePtr& space);

/// Every coherent orientation, by exhaustive enumeration (sorted by bits).
/// Independent oracle for cubulate; limited to 24 walls.
std::vector<Mask> enumerate_oracle(const WallSpace& space);

int graph_distance(const MedianGraph& g, int u, int v);

/// Shortest path from u to v flipping, at each step, the lowest-indexed wall
/// of the remaining difference whose side at u is minimal among the rest.
std::vector<int> geodesic_path(const MedianGraph& g, int u, int v);

/// Vertices agreeing with u and v wherever u and v agree, ascending.
std::vector<int> interval(const MedianGraph& g, int u, int v);

int median_vertex(const MedianGraph& g, int u, int v, int t);

/// Vertices whose orientation selects `side` of wall `wall`, ascending.
std::vector<int> halfspace_lift(const MedianGraph& g, int wall, int side);

}  // namespace wallcube

#endif  // WALLCUBE_CUBULATION_HPP
