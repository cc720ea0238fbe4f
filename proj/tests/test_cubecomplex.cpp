#include <random>
#include <set>

#include "doctest.h"
#include "wallcube/cubecomplex.hpp"
#include "wallcube/fixtures.hpp"

using namespace wallcube;
namespace fx = wallcube::fixtures;

namespace {

// f-vector by brute force: a k-cube is a vertex b and k walls such that all
// 2^k corners are vertices, counted once per canonical base.
std::vector<std::int64_t> brute_f_vector(const MedianGraph& g) {
  const std::set<Mask> vertices(g.vertices().begin(), g.vertices().end());
  const int w = g.space()->wall_count();
  std::vector<std::int64_t> f(static_cast<std::size_t>(w), 0);
  for (Mask s = 0; s < (Mask{1} << w); s += 2) {
    const int k = popcount(s);
    for (Mask b : vertices) {
      if ((b & s) != 0) continue;
      bool all = true;
      for (Mask sub = s;; sub = (sub - 1) & s) {
        all = all && vertices.count(b ^ sub);
        if (sub == 0) break;
      }
      if (all) ++f[static_cast<std::size_t>(k)];
    }
  }
  while (f.size() > 1 && f.back() == 0) f.pop_back();
  return f;
}

}  // namespace

TEST_CASE("fill_cubes on fixtures") {
  const auto hex = fill_cubes(cubulate(fx::hex6()));
  CHECK(hex.f_vector() == std::vector<std::int64_t>{8, 12, 6, 1});
  CHECK(euler_characteristic(hex) == 1);
  CHECK(hex.dimension() == 3);

  const auto p3 = fill_cubes(cubulate(fx::p3()));
  CHECK(p3.f_vector() == std::vector<std::int64_t>{3, 2});
  CHECK(euler_characteristic(p3) == 1);

  const auto pt = fill_cubes(cubulate(fx::pt()));
  CHECK(pt.f_vector() == std::vector<std::int64_t>{1});
  CHECK(euler_characteristic(pt) == 1);
  CHECK(pt.cubes(1).empty());
  CHECK(pt.cubes(5).empty());

  CHECK(fill_cubes(cubulate(fx::two())).f_vector() == std::vector<std::int64_t>{2, 1});
}

TEST_CASE("maximal_cubes") {
  const auto hex = maximal_cubes(fill_cubes(cubulate(fx::hex6())));
  REQUIRE(hex.size() == 1);
  CHECK(hex[0] == Cube{0, bit(1) | bit(2) | bit(3)});

  const auto p3 = maximal_cubes(fill_cubes(cubulate(fx::p3())));
  CHECK(p3.size() == 2);
  for (const auto& c : p3) CHECK(c.dimension() == 1);

  const auto two = maximal_cubes(fill_cubes(cubulate(fx::two())));
  REQUIRE(two.size() == 1);
  CHECK(two[0].dimension() == 1);

  const auto pt = maximal_cubes(fill_cubes(cubulate(fx::pt())));
  REQUIRE(pt.size() == 1);
  CHECK(pt[0].dimension() == 0);
}

TEST_CASE("cube canonical form") {
  const auto c = fill_cubes(cubulate(fx::hex6()));
  for (int k = 1; k <= c.dimension(); ++k)
    for (const Cube& cube : c.cubes(k)) CHECK((cube.base & cube.walls) == 0);
  CHECK_FALSE(c.contains(Cube{0b0010, 0b0110}));  // base not canonical
}

TEST_CASE("cube complex invariants on random spaces") {
  std::mt19937_64 rng(77);
  std::vector<SpacePtr> spaces{fx::pt(), fx::two(), fx::p3(), fx::hex6()};
  for (int k = 0; k < 150; ++k) spaces.push_back(fx::random_wallspace(rng));
  for (const auto& s : spaces) {
    const auto g = cubulate(s);
    const auto c = fill_cubes(g);
    CHECK(c.f_vector() == brute_f_vector(g));
    CHECK(euler_characteristic(c) == 1);
    CHECK(verify_downward_closure(c).passed);
    CHECK(verify_square_crossing(c).passed);
    const auto under = g.underlying();
    for (int k = 1; k <= c.dimension(); ++k) {
      for (const Cube& cube : c.cubes(k)) {
        for (Mask sub = cube.walls;; sub = (sub - 1) & cube.walls) {
          const auto corner = g.find(cube.base ^ sub);
          REQUIRE(corner.has_value());
          for (int i : bit_indices(cube.walls)) CHECK(under.has_edge(*corner, *g.find(cube.base ^ sub ^ bit(i))));
          if (sub == 0) break;
        }
      }
    }
    // maximal cubes cover every vertex
    std::set<Mask> covered;
    for (const Cube& m : maximal_cubes(c))
      for (Mask sub = m.walls;; sub = (sub - 1) & m.walls) {
        covered.insert(m.base ^ sub);
        if (sub == 0) break;
      }
    CHECK(covered.size() == static_cast<std::size_t>(g.vertex_count()));
  }
}

TEST_CASE("squares face list") {
  const auto text = squares_face_list(fill_cubes(cubulate(fx::hex6())));
  CHECK(text.rfind("# squares\n8 6\n0000\n", 0) == 0);
  const auto p3 = squares_face_list(fill_cubes(cubulate(fx::p3())));
  CHECK(p3 == "# squares\n3 0\n000\n010\n011\n");
}
