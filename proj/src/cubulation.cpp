#include "wallcube/cubulation.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace wallcube {

Mask MedianGraph::bits(int v) const {
  check_vertex(v, "cubulation::bits");
  return vertices_[static_cast<std::size_t>(v)];
}

std::optional<int> MedianGraph::find(Mask bits) const {
  auto it = index_.find(bits);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<std::pair<int, int>>& MedianGraph::neighbors(int v) const {
  check_vertex(v, "cubulation::neighbors");
  return adjacency_[static_cast<std::size_t>(v)];
}

int MedianGraph::sigma(int x) const {
  space_->check_point(x, "cubulation::sigma");
  return sigma_[static_cast<std::size_t>(x)];
}

int MedianGraph::principal_point(int v) const {
  check_vertex(v, "cubulation::principal_point");
  return principal_point_[static_cast<std::size_t>(v)];
}

Graph MedianGraph::underlying() const {
  Graph g(vertex_count());
  for (const auto& e : edges_) g.add_edge(e.u, e.v);
  return g;
}

void MedianGraph::check_vertex(int v, const char* where) const {
  if (v < 0 || v >= vertex_count())
    throw Error(ErrorKind::InvalidVertex, where, "vertex index " + std::to_string(v) + " out of range");
}

MedianGraph cubulate(const SpacePtr& space) {
  if (!space) throw Error(ErrorKind::InvalidSpace, "cubulation::cubulate", "null space");
  const WallSpace& s = *space;

  MedianGraph g;
  g.space_ = space;
  auto intern = [&g](Mask bits) {
    auto [it, inserted] = g.index_.emplace(bits, static_cast<int>(g.vertices_.size()));
    if (inserted) g.vertices_.push_back(bits);
    return std::pair{it->second, inserted};
  };

  std::deque<int> queue;
  g.sigma_.reserve(static_cast<std::size_t>(s.point_count()));
  for (int x = 0; x < s.point_count(); ++x) {
    auto [v, inserted] = intern(principal_bits(s, x));
    g.sigma_.push_back(v);
    if (inserted) queue.push_back(v);
  }

  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    const Mask bits = g.vertices_[static_cast<std::size_t>(v)];
    for (int i : bit_indices(minimal_walls(s, bits))) {
      auto [u, inserted] = intern(bits ^ bit(i));
      if (inserted) queue.push_back(u);
    }
  }

  const auto n = g.vertices_.size();
  g.adjacency_.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    const Mask bits = g.vertices_[v];
    for (int i : bit_indices(minimal_walls(s, bits))) {
      const int u = g.index_.at(bits ^ bit(i));
      g.adjacency_[v].emplace_back(u, i);
      if (static_cast<int>(v) < u) g.edges_.push_back({static_cast<int>(v), u, i});
    }
  }

  g.principal_point_.assign(n, -1);
  for (int x = s.point_count() - 1; x >= 0; --x)
    g.principal_point_[static_cast<std::size_t>(g.sigma_[static_cast<std::size_t>(x)])] = x;
  return g;
}

std::vector<Mask> enumerate_oracle(const WallSpace& space) {
  const int w = space.wall_count();
  if (w > 24)
    throw Error(ErrorKind::TooManyWalls, "cubulation::enumerate_oracle",
                std::to_string(w) + " walls exceed the enumeration limit of 24");
  std::vector<Mask> out;
  const Mask count = Mask{1} << (w - 1);
  for (Mask m = 0; m < count; ++m) {
    const Mask bits = m << 1;
    if (is_ultrafilter(space, bits)) out.push_back(bits);
  }
  return out;
}

int graph_distance(const MedianGraph& g, int u, int v) {
  return popcount(g.bits(u) ^ g.bits(v));
}

std::vector<int> geodesic_path(const MedianGraph& g, int u, int v) {
  const WallSpace& s = *g.space();
  const Mask start = g.bits(u);
  Mask current = start;
  Mask remaining = start ^ g.bits(v);
  std::vector<int> path{u};
  while (remaining != 0) {
    int chosen = -1;
    for (int i : bit_indices(remaining)) {
      const int side = test(start, i) ? 1 : 0;
      // other remaining walls have their u-side chosen at u as well
      const Mask smaller = (s.strictly_inside(i, side, 1) & start & remaining) |
                           (s.strictly_inside(i, side, 0) & ~start & remaining);
      if (smaller == 0) {
        chosen = i;
        break;
      }
    }
    assert(chosen >= 0);
    current ^= bit(chosen);
    remaining &= ~bit(chosen);
    const auto next = g.find(current);
    assert(next.has_value());
    path.push_back(*next);
  }
  return path;
}

std::vector<int> interval(const MedianGraph& g, int u, int v) {
  const Mask a = g.bits(u);
  const Mask b = g.bits(v);
  const Mask agree = ~(a ^ b);
  std::vector<int> out;
  for (int w = 0; w < g.vertex_count(); ++w)
    if (((g.vertices()[static_cast<std::size_t>(w)] ^ a) & agree) == 0) out.push_back(w);
  return out;
}

int median_vertex(const MedianGraph& g, int u, int v, int t) {
  const Mask a = g.bits(u);
  const Mask b = g.bits(v);
  const Mask c = g.bits(t);
  const Mask m = majority(a, b, c);
  // m agrees with each pair wherever that pair agrees, so it lies in all three intervals
  assert(((m ^ a) & ~(a ^ b)) == 0 && ((m ^ b) & ~(b ^ c)) == 0 && ((m ^ c) & ~(c ^ a)) == 0);
  const auto found = g.find(m);
  if (!found)
    throw Error(ErrorKind::NotMedian, "cubulation::median_vertex",
                "boolean median " + to_bitstring(m, g.space()->wall_count()) + " is not a vertex");
  return *found;
}

std::vector<int> halfspace_lift(const MedianGraph& g, int wall, int side) {
  g.space()->check_wall(wall, "cubulation::halfspace_lift");
  if (side != 0 && side != 1)
    throw Error(ErrorKind::InvalidWall, "cubulation::halfspace_lift", "side must be 0 or 1");
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if ((test(g.vertices()[static_cast<std::size_t>(v)], wall) ? 1 : 0) == side) out.push_back(v);
  return out;
}

}  // namespace wallcube
