#include "wallcube/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace wallcube {
namespace {

std::string triple_text(int u, int v, int t) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ", " + std::to_string(t) + ")";
}

std::string pair_text(int u, int v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

IntervalTable::IntervalTable(const Graph& g)
    : n_(g.vertex_count()),
      stride_((static_cast<std::size_t>(g.vertex_count()) + 63) / 64),
      dist_(all_pairs_distances(g)),
      words_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_) * stride_, 0) {
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      const int d = distance(u, v);
      if (d < 0) continue;
      auto* r = words_.data() + (static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                                 static_cast<std::size_t>(v)) * stride_;
      for (int z = 0; z < n_; ++z) {
        const int a = distance(u, z);
        const int b = distance(z, v);
        if (a >= 0 && b >= 0 && a + b == d) r[static_cast<std::size_t>(z) / 64] |= bit(z % 64);
      }
    }
  }
}

bool IntervalTable::contains(int u, int v, int z) const {
  return test(row(u, v)[static_cast<std::size_t>(z) / 64], z % 64);
}

std::vector<int> IntervalTable::members(int u, int v) const {
  std::vector<int> out;
  for (int z = 0; z < n_; ++z)
    if (contains(u, v, z)) out.push_back(z);
  return out;
}

int IntervalTable::size(int u, int v) const {
  const auto* r = row(u, v);
  int count = 0;
  for (std::size_t k = 0; k < stride_; ++k) count += popcount(r[k]);
  return count;
}

int IntervalTable::triple_intersection(int u, int v, int t, int cap) const {
  const auto* a = row(u, v);
  const auto* b = row(v, t);
  const auto* c = row(t, u);
  int count = 0;
  for (std::size_t k = 0; k < stride_; ++k) {
    count += popcount(a[k] & b[k] & c[k]);
    if (count > cap) break;
  }
  return count;
}

Mask IntervalTable::mask(int u, int v) const { return stride_ == 0 ? 0 : row(u, v)[0]; }

VerificationReport verify_median_graph(const Graph& g) {
  if (!g.is_simplicial())
    throw Error(ErrorKind::NonSimplicialGraph, "verify::verify_median_graph",
                "graph has loops or multiple edges");
  if (!g.is_connected())
    throw Error(ErrorKind::DisconnectedGraph, "verify::verify_median_graph", "graph is disconnected");

  const IntervalTable intervals(g);
  const int n = g.vertex_count();
  // The intersection is symmetric in the triple, so unordered triples suffice.
  for (int u = 0; u < n; ++u) {
    for (int v = u; v < n; ++v) {
      for (int t = v; t < n; ++t) {
        const int size = intervals.triple_intersection(u, v, t, 1);
        if (size != 1) {
          return VerificationReport::fail(
              "median", {u, v, t},
              "intervals of " + triple_text(u, v, t) + " share " +
                  (size == 0 ? std::string("no vertex") : std::string("more than one vertex")));
        }
      }
    }
  }
  return VerificationReport::pass("median", std::to_string(n) + " vertices, all triples");
}

VerificationReport verify_metric_coincidence(const MedianGraph& g) {
  const int n = g.vertex_count();
  const int w = g.space()->wall_count();
  std::vector<std::vector<char>> in_lift(static_cast<std::size_t>(w), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < w; ++i)
    for (int v : halfspace_lift(g, i, 0)) in_lift[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] = 1;

  const auto dist = all_pairs_distances(g.underlying());
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      int separating = 0;
      for (int i = 0; i < w; ++i)
        if (in_lift[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)] !=
            in_lift[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)])
          ++separating;
      const int d = dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
      if (separating != d) {
        return VerificationReport::fail("metric-coincidence", {u, v},
                                        "pair " + pair_text(u, v) + ": " + std::to_string(separating) +
                                            " lifted walls vs path distance " + std::to_string(d));
      }
    }
  }
  return VerificationReport::pass("metric-coincidence", std::to_string(n * (n - 1) / 2) + " pairs");
}

VerificationReport verify_distance_law(const MedianGraph& g) {
  const int n = g.vertex_count();
  const auto dist = all_pairs_distances(g.underlying());
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const int d = dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
      if (d != popcount(g.bits(u) ^ g.bits(v)))
        return VerificationReport::fail("distance-law", {u, v},
                                        "pair " + pair_text(u, v) + ": BFS distance " + std::to_string(d) +
                                            " vs symmetric difference " +
                                            std::to_string(popcount(g.bits(u) ^ g.bits(v))));
    }
  }
  const WallSpace& s = *g.space();
  for (int x = 0; x < s.point_count(); ++x) {
    for (int y = 0; y < s.point_count(); ++y) {
      const int d = dist[static_cast<std::size_t>(g.sigma(x))][static_cast<std::size_t>(g.sigma(y))];
      if (wall_metric(s, x, y) != d)
        return VerificationReport::fail("distance-law", {x, y},
                                        "points " + pair_text(x, y) + ": wall metric " +
                                            std::to_string(wall_metric(s, x, y)) + " vs distance " +
                                            std::to_string(d));
    }
  }
  return VerificationReport::pass("distance-law", std::to_string(n * n) + " vertex pairs, " +
                                                      std::to_string(s.point_count() * s.point_count()) +
                                                      " point pairs");
}

VerificationReport verify_interval_characterization(const MedianGraph& g) {
  const IntervalTable bfs(g.underlying());
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (interval(g, u, v) != bfs.members(u, v))
        return VerificationReport::fail("interval", {u, v},
                                        "algebraic and BFS intervals differ for " + pair_text(u, v));
    }
  }
  return VerificationReport::pass("interval", std::to_string(n * n) + " pairs");
}

VerificationReport verify_interval_bound(const MedianGraph& g) {
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int walls = popcount(g.bits(u) ^ g.bits(v));
      const int size = static_cast<int>(interval(g, u, v).size());
      if (walls > size - 1)
        return VerificationReport::fail("interval-bound", {u, v},
                                        pair_text(u, v) + ": " + std::to_string(walls) +
                                            " separating walls, interval size " + std::to_string(size));
    }
  }
  return VerificationReport::pass("interval-bound", std::to_string(n * (n - 1) / 2) + " pairs");
}

SpanClosure span_closure(const MedianGraph& g) {
  SpanClosure out;
  std::vector<char> member(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : g.sigma()) {
    if (!member[static_cast<std::size_t>(v)]) {
      member[static_cast<std::size_t>(v)] = 1;
      out.members.push_back(v);
    }
  }
  // Semi-naive: each round only looks at triples whose largest index is new.
  std::size_t frontier = 0;
  for (;;) {
    const std::size_t end = out.members.size();
    std::vector<int> added;
    for (std::size_t k = frontier; k < end; ++k) {
      const Mask c = g.bits(out.members[k]);
      for (std::size_t j = 0; j <= k; ++j) {
        const Mask b = g.bits(out.members[j]);
        for (std::size_t i = 0; i <= j; ++i) {
          const Mask m = majority(g.bits(out.members[i]), b, c);
          const auto v = g.find(m);
          if (!v) {
            out.escaped = true;
            continue;
          }
          if (!member[static_cast<std::size_t>(*v)]) {
            member[static_cast<std::size_t>(*v)] = 1;
            added.push_back(*v);
          }
        }
      }
    }
    if (added.empty()) break;
    out.added_per_round.push_back(static_cast<int>(added.size()));
    out.members.insert(out.members.end(), added.begin(), added.end());
    frontier = end;
  }
  return out;
}

VerificationReport verify_span(const MedianGraph& g) {
  const SpanClosure closure = span_closure(g);
  if (closure.escaped)
    return VerificationReport::fail("span", {}, "a boolean median of vertices is not a vertex");
  if (static_cast<int>(closure.members.size()) != g.vertex_count()) {
    std::vector<int> missing;
    std::vector<char> member(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : closure.members) member[static_cast<std::size_t>(v)] = 1;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (!member[static_cast<std::size_t>(v)]) missing.push_back(v);
    return VerificationReport::fail("span", missing,
                                    std::to_string(missing.size()) + " vertices outside the median closure");
  }
  std::string rounds;
  for (int a : closure.added_per_round) rounds += (rounds.empty() ? "" : ", ") + std::to_string(a);
  const auto n_rounds = closure.added_per_round.size();
  return VerificationReport::pass("span", std::to_string(n_rounds) + (n_rounds == 1 ? " round" : " rounds") +
                                              ", added [" + rounds + "]");
}

std::vector<Mask> graph_halfspaces_bruteforce(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 16)
    throw Error(ErrorKind::GraphTooLarge, "verify::graph_halfspaces_bruteforce",
                std::to_string(n) + " vertices exceed the limit of 16");
  const IntervalTable intervals(g);
  const Mask all = low_bits(n);
  auto convex = [&](Mask h) {
    for (int u : bit_indices(h))
      for (int v : bit_indices(h))
        if ((intervals.mask(u, v) & ~h) != 0) return false;
    return true;
  };
  std::vector<Mask> out;
  for (Mask h = 0; h <= all; ++h)
    if (convex(h) && convex(all & ~h)) out.push_back(h);
  return out;
}

VerificationReport verify_halfspace_bijection(const MedianGraph& g) {
  const int n = g.vertex_count();
  if (n > 16)
    throw Error(ErrorKind::GraphTooLarge, "verify::verify_halfspace_bijection",
                std::to_string(n) + " vertices exceed the limit of 16");
  std::vector<Mask> lifts;
  for (int i = 0; i < g.space()->wall_count(); ++i)
    for (int s = 0; s < 2; ++s) lifts.push_back(mask_of(halfspace_lift(g, i, s)));

  std::set<Mask> distinct(lifts.begin(), lifts.end());
  if (distinct.size() != lifts.size())
    return VerificationReport::fail("halfspace-bijection", {},
                                    "two halfspaces lift to the same vertex set");
  const auto brute = graph_halfspaces_bruteforce(g.underlying());
  if (!std::equal(distinct.begin(), distinct.end(), brute.begin(), brute.end())) {
    std::vector<Mask> diff;
    std::set_symmetric_difference(distinct.begin(), distinct.end(), brute.begin(), brute.end(),
                                  std::back_inserter(diff));
    return VerificationReport::fail("halfspace-bijection", bit_indices(diff.front()),
                                    std::to_string(distinct.size()) + " lifted vs " +
                                        std::to_string(brute.size()) + " convex/co-convex subsets");
  }
  return VerificationReport::pass("halfspace-bijection", std::to_string(lifts.size()) + " halfspaces");
}

SpacePtr derive_wallspace(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kMaxPoints)
    throw Error(ErrorKind::GraphTooLarge, "verify::derive_wallspace",
                std::to_string(n) + " vertices exceed the limit of " + std::to_string(kMaxPoints));
  if (!verify_median_graph(g).passed)
    throw Error(ErrorKind::NotMedian, "verify::derive_wallspace", "graph is not median");

  const auto dist = all_pairs_distances(g);
  WallSpaceDraft draft;
  for (int v = 0; v < n; ++v) draft.names.push_back(g.name(v));
  for (auto [u, v] : g.edges()) {
    Mask near_u = 0;
    Mask near_v = 0;
    for (int x = 0; x < n; ++x) {
      const int du = dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(u)];
      const int dv = dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(v)];
      if (du < dv) near_u |= bit(x);
      else if (dv < du) near_v |= bit(x);
      else
        throw Error(ErrorKind::NotMedian, "verify::derive_wallspace",
                    "vertex " + g.name(x) + " is equidistant from edge " + pair_text(u, v));
    }
    draft.walls.push_back({near_u, near_v});
  }
  return WallSpace::build(draft);
}

VerificationReport verify_idempotence(const Graph& g) {
  const MedianGraph c = cubulate(derive_wallspace(g));
  const int n = g.vertex_count();
  if (c.vertex_count() != n)
    return VerificationReport::fail("idempotence", {},
                                    "cubulation has " + std::to_string(c.vertex_count()) +
                                        " vertices, graph has " + std::to_string(n));
  const Graph h = c.underlying();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v) != h.has_edge(c.sigma(u), c.sigma(v)))
        return VerificationReport::fail("idempotence", {u, v},
                                        "sigma does not preserve adjacency at " + pair_text(u, v));
    }
  }
  return VerificationReport::pass("idempotence", "sigma is an isomorphism on " + std::to_string(n) + " vertices");
}

namespace {

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.vertex_count()), 0);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= bit(v);
    adj[static_cast<std::size_t>(v)] |= bit(u);
  }
  return adj;
}

// Joint colour refinement of both graphs so colours are comparable.
std::pair<std::vector<int>, std::vector<int>> refine(const std::vector<Mask>& a, const std::vector<Mask>& b) {
  std::vector<int> ca;
  std::vector<int> cb;
  for (Mask m : a) ca.push_back(popcount(m));
  for (Mask m : b) cb.push_back(popcount(m));
  std::size_t classes = 0;
  for (;;) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    auto signature = [](const std::vector<Mask>& adj, const std::vector<int>& colour, std::size_t v) {
      std::vector<int> nb;
      for (int u : bit_indices(adj[v])) nb.push_back(colour[static_cast<std::size_t>(u)]);
      std::sort(nb.begin(), nb.end());
      return std::pair{colour[v], nb};
    };
    std::vector<std::pair<int, std::vector<int>>> sa;
    std::vector<std::pair<int, std::vector<int>>> sb;
    for (std::size_t v = 0; v < a.size(); ++v) sa.push_back(signature(a, ca, v));
    for (std::size_t v = 0; v < b.size(); ++v) sb.push_back(signature(b, cb, v));
    for (const auto& s : sa) ids.emplace(s, 0);
    for (const auto& s : sb) ids.emplace(s, 0);
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (std::size_t v = 0; v < a.size(); ++v) ca[v] = ids.at(sa[v]);
    for (std::size_t v = 0; v < b.size(); ++v) cb[v] = ids.at(sb[v]);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {ca, cb};
}

bool extend(std::vector<int>& map, std::vector<char>& used, int x, const std::vector<Mask>& a,
            const std::vector<Mask>& b, const std::vector<int>& ca, const std::vector<int>& cb) {
  const int n = static_cast<int>(a.size());
  if (x == n) return true;
  for (int y = 0; y < n; ++y) {
    if (used[static_cast<std::size_t>(y)] || ca[static_cast<std::size_t>(x)] != cb[static_cast<std::size_t>(y)])
      continue;
    bool consistent = true;
    for (int p = 0; p < x && consistent; ++p)
      consistent = test(a[static_cast<std::size_t>(x)], p) ==
                   test(b[static_cast<std::size_t>(y)], map[static_cast<std::size_t>(p)]);
    if (!consistent) continue;
    map[static_cast<std::size_t>(x)] = y;
    used[static_cast<std::size_t>(y)] = 1;
    if (extend(map, used, x + 1, a, b, ca, cb)) return true;
    used[static_cast<std::size_t>(y)] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> graphs_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() > 64 || b.vertex_count() > 64)
    throw Error(ErrorKind::GraphTooLarge, "verify::graphs_isomorphic", "more than 64 vertices");
  if (a.vertex_count() != b.vertex_count()) return std::nullopt;
  const auto adj_a = adjacency_masks(a);
  const auto adj_b = adjacency_masks(b);
  auto [ca, cb] = refine(adj_a, adj_b);
  {
    auto sa = ca;
    auto sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::size_t edges_a = 0;
  std::size_t edges_b = 0;
  for (Mask m : adj_a) edges_a += static_cast<std::size_t>(popcount(m));
  for (Mask m : adj_b) edges_b += static_cast<std::size_t>(popcount(m));
  if (edges_a != edges_b) return std::nullopt;

  std::vector<int> map(adj_a.size(), -1);
  std::vector<char> used(adj_a.size(), 0);
  if (!extend(map, used, 0, adj_a, adj_b, ca, cb)) return std::nullopt;
  return map;
}

}  // namespace wallcube
