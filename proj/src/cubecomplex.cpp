#include "wallcube/cubecomplex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wallcube {

const std::vector<Cube>& CubeComplex::cubes(int dimension) const {
  static const std::vector<Cube> none;
  if (dimension < 0 || dimension >= static_cast<int>(cubes_.size())) return none;
  return cubes_[static_cast<std::size_t>(dimension)];
}

bool CubeComplex::contains(const Cube& c) const {
  const auto& list = cubes(c.dimension());
  return std::binary_search(list.begin(), list.end(), c);
}

std::vector<std::int64_t> CubeComplex::f_vector() const {
  std::vector<std::int64_t> f;
  for (const auto& list : cubes_) f.push_back(static_cast<std::int64_t>(list.size()));
  return f;
}

CubeComplex fill_cubes(const MedianGraph& g) {
  CubeComplex c;
  c.graph_ = g;
  const int w = g.space()->wall_count();

  std::vector<Cube> vertices;
  for (Mask v : g.vertices()) vertices.push_back({v, 0});
  std::sort(vertices.begin(), vertices.end());
  c.cubes_.push_back(std::move(vertices));

  std::vector<Cube> edges;
  for (const auto& e : g.edges()) edges.push_back({g.bits(e.u) & ~bit(e.wall), bit(e.wall)});
  if (edges.empty()) return c;
  std::sort(edges.begin(), edges.end());
  c.cubes_.push_back(std::move(edges));

  auto has_edge = [&g](Mask a, Mask b) {
    const auto u = g.find(a);
    if (!u) return false;
    for (auto [v, wall] : g.neighbors(*u))
      if (g.bits(v) == b) return true;
    return false;
  };

  // Squares: b -i- b^i -j- b^i^j -i- b^j -j- b, a 4-cycle with alternating labels.
  std::vector<Cube> squares;
  for (Mask b : g.vertices()) {
    for (int i = 1; i < w; ++i) {
      if (test(b, i)) continue;
      for (int j = i + 1; j < w; ++j) {
        if (test(b, j)) continue;
        const Mask bi = b ^ bit(i);
        const Mask bj = b ^ bit(j);
        const Mask bij = bi ^ bit(j);
        if (has_edge(b, bi) && has_edge(bi, bij) && has_edge(bij, bj) && has_edge(bj, b))
          squares.push_back({b, bit(i) | bit(j)});
      }
    }
  }
  if (squares.empty()) return c;
  std::sort(squares.begin(), squares.end());
  c.cubes_.push_back(std::move(squares));

  for (;;) {
    const auto& lower = c.cubes_.back();
    std::vector<Cube> next;
    for (const Cube& face : lower) {
      const int top = 63 - std::countl_zero(face.walls);
      for (int j = top + 1; j < w; ++j) {
        if (test(face.base, j)) continue;
        const Cube candidate{face.base, face.walls | bit(j)};
        bool ok = true;
        for (int i : bit_indices(candidate.walls)) {
          if (!std::binary_search(lower.begin(), lower.end(), Cube{candidate.base, candidate.walls & ~bit(i)})) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        // corners: base xor every subset of the wall set
        const Mask s = candidate.walls;
        for (Mask sub = s;; sub = (sub - 1) & s) {
          if (!g.find(candidate.base ^ sub)) {
            ok = false;
            break;
          }
          if (sub == 0) break;
        }
        if (ok) next.push_back(candidate);
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    c.cubes_.push_back(std::move(next));
  }
  return c;
}

std::int64_t euler_characteristic(const CubeComplex& c) {
  std::int64_t chi = 0;
  std::int64_t sign = 1;
  for (std::int64_t f : c.f_vector()) {
    chi += sign * f;
    sign = -sign;
  }
  return chi;
}

std::vector<Cube> maximal_cubes(const CubeComplex& c) {
  std::vector<Cube> out;
  const int w = c.graph().space()->wall_count();
  for (int k = 0; k <= c.dimension(); ++k) {
    for (const Cube& cube : c.cubes(k)) {
      bool maximal = true;
      for (int j = 1; j < w && maximal; ++j) {
        if (test(cube.walls, j)) continue;
        if (c.contains({cube.base & ~bit(j), cube.walls | bit(j)})) maximal = false;
      }
      if (maximal) out.push_back(cube);
    }
  }
  return out;
}

VerificationReport verify_square_crossing(const CubeComplex& c) {
  const WallSpace& s = *c.graph().space();
  std::set<std::pair<int, int>> labels;
  for (const Cube& sq : c.cubes(2)) {
    const auto walls = bit_indices(sq.walls);
    labels.emplace(walls[0], walls[1]);
  }
  for (int i = 1; i < s.wall_count(); ++i) {
    for (int j = i + 1; j < s.wall_count(); ++j) {
      if (walls_cross(s, i, j) != labels.contains({i, j}))
        return VerificationReport::fail("cube-crossing", {i, j},
                                        "walls " + std::to_string(i) + " and " + std::to_string(j) +
                                            (walls_cross(s, i, j) ? " cross but label no square"
                                                                  : " label a square but do not cross"));
    }
  }
  return VerificationReport::pass("cube-crossing", std::to_string(labels.size()) + " crossing pairs");
}

VerificationReport verify_downward_closure(const CubeComplex& c) {
  for (int k = 1; k <= c.dimension(); ++k) {
    for (const Cube& cube : c.cubes(k)) {
      for (int i : bit_indices(cube.walls)) {
        const Cube low{cube.base, cube.walls & ~bit(i)};
        const Cube high{cube.base | bit(i), cube.walls & ~bit(i)};
        if (!c.contains(low) || !c.contains(high))
          return VerificationReport::fail("downward-closure", {k, i},
                                          "a face of a " + std::to_string(k) + "-cube across wall " +
                                              std::to_string(i) + " is missing");
      }
    }
  }
  return VerificationReport::pass("downward-closure", "dimension " + std::to_string(c.dimension()));
}

std::string squares_face_list(const CubeComplex& c) {
  const MedianGraph& g = c.graph();
  const int w = g.space()->wall_count();
  std::ostringstream out;
  out << "# squares\n" << g.vertex_count() << ' ' << c.cubes(2).size() << '\n';
  for (Mask v : g.vertices()) out << to_bitstring(v, w) << '\n';
  for (const Cube& sq : c.cubes(2)) {
    const auto walls = bit_indices(sq.walls);
    const Mask i = bit(walls[0]);
    const Mask j = bit(walls[1]);
    out << 4 << ' ' << *g.find(sq.base) << ' ' << *g.find(sq.base ^ i) << ' ' << *g.find(sq.base ^ i ^ j)
        << ' ' << *g.find(sq.base ^ j) << '\n';
  }
  return out.str();
}

}  // namespace wallcube
