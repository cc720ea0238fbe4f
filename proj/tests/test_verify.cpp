#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "wallcube/fixtures.hpp"
#include "wallcube/verify.hpp"

using namespace wallcube;
namespace fx = wallcube::fixtures;

namespace {

// Median check straight from the definition, on explicit vectors.
bool median_by_definition(const Graph& g) {
  const auto dist = oracle::bfs_all(oracle::adjacency(g));
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int t = 0; t < n; ++t) {
        int common = 0;
        for (int z = 0; z < n; ++z) {
          auto in = [&](int a, int b) {
            return dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(z)] +
                       dist[static_cast<std::size_t>(z)][static_cast<std::size_t>(b)] ==
                   dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
          };
          common += in(u, v) && in(v, t) && in(t, u);
        }
        if (common != 1) return false;
      }
  return true;
}

Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int k = 1; k <= leaves; ++k) g.add_edge(0, k);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("verify_median_graph") {
  CHECK(verify_median_graph(fx::hypercube(3)).passed);
  CHECK(verify_median_graph(fx::path(1)).passed);
  CHECK(verify_median_graph(fx::path(5)).passed);
  CHECK(verify_median_graph(star(4)).passed);

  const auto c6 = verify_median_graph(fx::cycle(6));
  CHECK_FALSE(c6.passed);
  CHECK(c6.counterexample == std::vector<int>{0, 2, 4});

  CHECK_FALSE(verify_median_graph(fx::hexagonal_patch(5, 3)).passed);
  CHECK_FALSE(verify_median_graph(complete(3)).passed);
  CHECK_FALSE(verify_median_graph(fx::cycle(5)).passed);

  Graph loop(2);
  loop.add_edge(0, 1);
  loop.add_edge(1, 1);
  try {
    verify_median_graph(loop);
    FAIL("expected NonSimplicialGraph");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonSimplicialGraph);
  }
  Graph multi = Graph::from_edges(2, {{0, 1}, {1, 0}});
  CHECK_THROWS_AS(verify_median_graph(multi), Error);
  try {
    verify_median_graph(Graph(2));
    FAIL("expected DisconnectedGraph");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DisconnectedGraph);
  }
}

TEST_CASE("verify_median_graph agrees with the definition") {
  std::vector<Graph> graphs{fx::hypercube(2), fx::hypercube(4), fx::cycle(4), fx::cycle(6),
                            fx::cycle(8), fx::hexagonal_patch(5, 2), complete(4), star(3)};
  std::mt19937_64 rng(11);
  for (int k = 0; k < 40; ++k) graphs.push_back(cubulate(fx::random_wallspace(rng, 6, 6)).underlying());
  // random connected graphs: a random tree plus a few chords
  for (int k = 0; k < 40; ++k) {
    const int n = 3 + static_cast<int>(rng() % 7);
    Graph g(n);
    std::set<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
      const int u = static_cast<int>(rng() % static_cast<unsigned>(v));
      g.add_edge(u, v);
      edges.emplace(u, v);
    }
    for (int c = 0; c < 2; ++c) {
      int u = static_cast<int>(rng() % static_cast<unsigned>(n));
      int v = static_cast<int>(rng() % static_cast<unsigned>(n));
      if (u > v) std::swap(u, v);
      if (u != v && edges.emplace(u, v).second) g.add_edge(u, v);
    }
    graphs.push_back(g);
  }
  for (const auto& g : graphs) CHECK(verify_median_graph(g).passed == median_by_definition(g));
}

TEST_CASE("metric coincidence, distance law, interval checks") {
  for (const auto& s : {fx::hex6(), fx::pt(), fx::p3(), fx::two()}) {
    const auto g = cubulate(s);
    CHECK(verify_metric_coincidence(g).passed);
    CHECK(verify_distance_law(g).passed);
    CHECK(verify_interval_characterization(g).passed);
    CHECK(verify_interval_bound(g).passed);
  }
  CHECK(verify_metric_coincidence(cubulate(fx::hex6())).detail == "28 pairs");
}

TEST_CASE("span") {
  const auto hex = cubulate(fx::hex6());
  const auto closure = span_closure(hex);
  CHECK(closure.added_per_round == std::vector<int>{2});
  CHECK(closure.members.size() == 8);
  CHECK(verify_span(hex).passed);
  // the two additions are the medians of the alternating triples
  std::set<int> added(closure.members.begin() + 6, closure.members.end());
  CHECK(added == std::set<int>{median_vertex(hex, hex.sigma(0), hex.sigma(2), hex.sigma(4)),
                               median_vertex(hex, hex.sigma(1), hex.sigma(3), hex.sigma(5))});

  const auto p3 = span_closure(cubulate(fx::p3()));
  CHECK(p3.added_per_round.empty());
  CHECK(verify_span(cubulate(fx::pt())).passed);
}

TEST_CASE("graph_halfspaces_bruteforce") {
  CHECK(graph_halfspaces_bruteforce(fx::hypercube(3)).size() == 8);
  CHECK(graph_halfspaces_bruteforce(fx::path(3)).size() == 6);
  CHECK(graph_halfspaces_bruteforce(fx::path(1)) == std::vector<Mask>{0, 1});
  CHECK_THROWS_AS(graph_halfspaces_bruteforce(fx::path(17)), Error);
}

TEST_CASE("halfspace bijection") {
  CHECK(verify_halfspace_bijection(cubulate(fx::hex6())).passed);
  CHECK(verify_halfspace_bijection(cubulate(fx::two())).detail == "4 halfspaces");
  CHECK(verify_halfspace_bijection(cubulate(fx::pt())).detail == "2 halfspaces");

  WallSpaceDraft many;
  for (int x = 0; x < 5; ++x) many.names.push_back(std::to_string(x));
  for (int x = 0; x < 5; ++x) many.walls.push_back({bit(x), low_bits(5) & ~bit(x)});
  const auto star_space = cubulate(WallSpace::build(many));
  REQUIRE(star_space.vertex_count() == 6);
  CHECK(verify_halfspace_bijection(star_space).passed);

  WallSpaceDraft wide;
  for (int x = 0; x < 6; ++x) wide.names.push_back(std::to_string(x));
  for (Mask m : {0b000111u, 0b001110u, 0b011100u, 0b010101u, 0b000011u}) wide.walls.push_back({m, low_bits(6) & ~m});
  const auto big = cubulate(WallSpace::build(wide));
  REQUIRE(big.vertex_count() > 16);
  CHECK_THROWS_AS(verify_halfspace_bijection(big), Error);
}

TEST_CASE("derive_wallspace") {
  const auto p = derive_wallspace(fx::path(3));
  CHECK(p->wall_count() == 3);
  CHECK(p->wall(1).side0 == 0b001);
  CHECK(p->wall(2).side0 == 0b011);

  const auto q = derive_wallspace(fx::hypercube(3));
  REQUIRE(q->wall_count() == 4);
  for (int i = 1; i < 4; ++i) CHECK(popcount(q->wall(i).side0) == 4);

  const auto single = derive_wallspace(fx::path(1));
  CHECK(single->point_count() == 1);
  CHECK(single->wall_count() == 1);

  try {
    derive_wallspace(fx::cycle(6));
    FAIL("expected NotMedian");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotMedian);
  }
  CHECK_THROWS_AS(derive_wallspace(fx::path(65)), Error);
}

TEST_CASE("idempotence") {
  CHECK(verify_idempotence(fx::hypercube(3)).passed);
  CHECK(verify_idempotence(fx::path(5)).passed);
  CHECK(verify_idempotence(fx::path(1)).passed);
  CHECK(verify_idempotence(star(5)).passed);
  CHECK_THROWS_AS(verify_idempotence(fx::cycle(6)), Error);

  std::mt19937_64 rng(31);
  for (int k = 0; k < 30; ++k) {
    const auto g = cubulate(fx::random_wallspace(rng));
    if (g.vertex_count() > 64) continue;
    const auto h = g.underlying();
    CHECK(verify_idempotence(h).passed);
    CHECK(graphs_isomorphic(h, cubulate(derive_wallspace(h)).underlying()).has_value());
  }
}

TEST_CASE("graphs_isomorphic") {
  const auto q3 = fx::hypercube(3);
  const auto hex = cubulate(fx::hex6()).underlying();
  const auto witness = graphs_isomorphic(q3, hex);
  REQUIRE(witness.has_value());
  for (auto [u, v] : q3.edges()) CHECK(hex.has_edge((*witness)[static_cast<std::size_t>(u)], (*witness)[static_cast<std::size_t>(v)]));
  CHECK_FALSE(graphs_isomorphic(q3, fx::cycle(8)).has_value());
  CHECK(graphs_isomorphic(fx::path(1), fx::path(1)) == std::vector<int>{0});
  // lexicographically least witness for a path onto itself is the identity
  CHECK(graphs_isomorphic(fx::path(4), fx::path(4)) == std::vector<int>{0, 1, 2, 3});
  // same degree sequence, different graphs: C6 vs two triangles
  Graph triangles = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK_FALSE(graphs_isomorphic(fx::cycle(6), triangles).has_value());
  CHECK(graphs_isomorphic(fx::hypercube(6), fx::hypercube(6)).has_value());
  CHECK_THROWS_AS(graphs_isomorphic(fx::path(65), fx::path(65)), Error);

  std::mt19937_64 rng(2);
  for (int k = 0; k < 20; ++k) {
    const auto g = cubulate(fx::random_wallspace(rng)).underlying();
    if (g.vertex_count() > 64) continue;
    std::vector<int> perm(static_cast<std::size_t>(g.vertex_count()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph relabeled(g.vertex_count());
    for (auto [u, v] : g.edges()) relabeled.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    CHECK(graphs_isomorphic(g, relabeled).has_value());
  }
}
