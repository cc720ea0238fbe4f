#ifndef WALLCUBE_VERIFY_HPP
#define WALLCUBE_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "wallcube/bits.hpp"
#include "wallcube/cubulation.hpp"
#include "wallcube/graph.hpp"
#include "wallcube/report.hpp"
#include "wallcube/wallspace.hpp"

namespace wallcube {

/// All geodesic intervals of a graph, computed from BFS distances. Row (u, v)
/// is a bitset over vertices. Independent of any cubulation internals.
class IntervalTable {
 public:
  explicit IntervalTable(const Graph& g);

  int vertex_count() const { return n_; }
  int distance(int u, int v) const { return dist_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]; }
  bool contains(int u, int v, int z) const;
  std::vector<int> members(int u, int v) const;
  int size(int u, int v) const;
  /// Size of [u,v] ∩ [v,t] ∩ [t,u], stopping early once it exceeds `cap`.
  int triple_intersection(int u, int v, int t, int cap) const;
  /// Only valid for graphs with at most 64 vertices.
  Mask mask(int u, int v) const;

 private:
  const std::uint64_t* row(int u, int v) const {
    return words_.data() + (static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                            static_cast<std::size_t>(v)) * stride_;
  }

  int n_ = 0;
  std::size_t stride_ = 0;
  DistanceMatrix dist_;
  std::vector<std::uint64_t> words_;
};

/// Every vertex triple has exactly one common point of its three intervals.
/// Throws NonSimplicialGraph or DisconnectedGraph.
VerificationReport verify_median_graph(const Graph& g);

/// Lifted walls separating two vertices = BFS distance, for all pairs.
VerificationReport verify_metric_coincidence(const MedianGraph& g);

/// BFS distance equals the symmetric-difference size for all vertex pairs,
/// and sigma is an isometry for the wall metric.
VerificationReport verify_distance_law(const MedianGraph& g);

/// The algebraic interval equals the BFS interval for all vertex pairs.
VerificationReport verify_interval_characterization(const MedianGraph& g);

/// |symdiff(u,v)| <= |[u,v]| - 1 for all vertex pairs.
VerificationReport verify_interval_bound(const MedianGraph& g);

struct SpanClosure {
  std::vector<int> members;         // vertex indices, principal first
  std::vector<int> added_per_round; // rounds that added at least one vertex
  bool escaped = false;             // a median fell outside the vertex set
};

/// Closure of the principal vertices under the boolean median.
SpanClosure span_closure(const MedianGraph& g);

VerificationReport verify_span(const MedianGraph& g);

/// Vertex subsets H with H and its complement both convex. At most 16 vertices.
std::vector<Mask> graph_halfspaces_bruteforce(const Graph& g);

/// Lifted halfspaces equal the brute-force halfspaces and the lift is
/// injective. At most 16 vertices.
VerificationReport verify_halfspace_bijection(const MedianGraph& g);

/// Wall space of a median graph: one wall per edge class, splitting vertices
/// by which endpoint they are closer to. Throws NotMedian.
SpacePtr derive_wallspace(const Graph& g);

/// cubulate(derive_wallspace(g)) is isomorphic to g through sigma.
VerificationReport verify_idempotence(const Graph& g);

/// Exact isomorphism test. The witness maps vertices of a to vertices of b
/// and is lexicographically least. At most 64 vertices per graph.
std::optional<std::vector<int>> graphs_isomorphic(const Graph& a, const Graph& b);

}  // namespace wallcube

#endif  // WALLCUBE_VERIFY_HPP
