#include "wallcube/fixtures.hpp"

namespace wallcube::fixtures {
namespace {
Wall split(Mask side, int n) { return {side, low_bits(n) & ~side}; }
}  // namespace

WallSpaceDraft pt_draft() { return {{"p"}, {split(0b1, 1)}}; }

WallSpaceDraft two_draft() { return {{"a", "b"}, {split(0b11, 2), split(0b01, 2)}}; }

WallSpaceDraft p3_draft() {
  return {{"a", "b", "c"}, {split(0b111, 3), split(0b001, 3), split(0b011, 3)}};
}

WallSpaceDraft hex6_draft() {
  return {{"0", "1", "2", "3", "4", "5"},
          {split(0b111111, 6), split(0b000111, 6), split(0b001110, 6), split(0b011100, 6)}};
}

SpacePtr pt() { return WallSpace::build(pt_draft()); }
SpacePtr two() { return WallSpace::build(two_draft()); }
SpacePtr p3() { return WallSpace::build(p3_draft()); }
SpacePtr hex6() { return WallSpace::build(hex6_draft()); }

Graph hypercube(int dimension) {
  const int n = 1 << dimension;
  Graph g(n);
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < dimension; ++i)
      if (const int u = v ^ (1 << i); v < u) g.add_edge(v, u);
  return g;
}

Graph cycle(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph hexagonal_patch(int columns, int rows) {
  Graph g(columns * rows);
  auto id = [columns](int c, int r) { return r * columns + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < columns; ++c) {
      if (c + 1 < columns) g.add_edge(id(c, r), id(c + 1, r));
      if (r + 1 < rows && (c + r) % 2 == 0) g.add_edge(id(c, r), id(c, r + 1));
    }
  }
  return g;
}

SpacePtr random_wallspace(std::mt19937_64& rng, int max_points, int max_walls) {
  std::uniform_int_distribution<int> point_count(2, max_points);
  std::uniform_int_distribution<int> wall_count(1, max_walls - 1);
  for (;;) {
    const int n = point_count(rng);
    const int k = wall_count(rng);
    std::uniform_int_distribution<Mask> subset(1, low_bits(n) - 1);
    WallSpaceDraft draft;
    for (int x = 0; x < n; ++x) draft.names.push_back("p" + std::to_string(x));
    for (int i = 0; i < k; ++i) draft.walls.push_back(split(subset(rng), n));
    if (validate(draft).ok()) return WallSpace::build(draft);
  }
}

}  // namespace wallcube::fixtures
