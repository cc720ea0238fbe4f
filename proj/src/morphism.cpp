#include "wallcube/morphism.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

namespace wallcube {
namespace {

void check_well_formed(const WallMap& m, const char* where) {
  if (!m.source || !m.target) throw Error(ErrorKind::InvalidMorphism, where, "null wall space");
  if (static_cast<int>(m.point_map.size()) != m.source->point_count())
    throw Error(ErrorKind::InvalidMorphism, where, "point map does not cover the source points");
  for (int y : m.point_map)
    if (y < 0 || y >= m.target->point_count())
      throw Error(ErrorKind::InvalidMorphism, where, "point map leaves the target space");
}

Mask preimage(const WallMap& m, Mask target_side) {
  Mask out = 0;
  for (std::size_t x = 0; x < m.point_map.size(); ++x)
    if (test(target_side, m.point_map[x])) out |= bit(static_cast<int>(x));
  return out;
}

// For each target wall: which source halfspace its side0 pulls back to.
struct Pullback {
  enum Kind { ForcedSide0, ForcedSide1, Follows } kind;
  int source_wall = 0;
  int source_side = 0;
};

std::vector<Pullback> pullbacks(const WallMap& m, const char* where) {
  const WallSpace& src = *m.source;
  std::unordered_map<Mask, std::pair<int, int>> sides;
  for (int i = 0; i < src.wall_count(); ++i)
    for (int s = 0; s < 2; ++s) sides.emplace(src.walls()[static_cast<std::size_t>(i)].side(s), std::pair{i, s});

  std::vector<Pullback> out;
  for (int j = 0; j < m.target->wall_count(); ++j) {
    const Mask pre = preimage(m, m.target->walls()[static_cast<std::size_t>(j)].side0);
    if (pre == src.all_points()) {
      out.push_back({Pullback::ForcedSide0});
    } else if (pre == 0) {
      out.push_back({Pullback::ForcedSide1});
    } else if (auto it = sides.find(pre); it != sides.end()) {
      out.push_back({Pullback::Follows, it->second.first, it->second.second});
    } else {
      throw Error(ErrorKind::InvalidMorphism, where,
                  "target wall " + std::to_string(j) + " does not pull back to a wall");
    }
  }
  return out;
}

Mask push_bits(const std::vector<Pullback>& plan, Mask omega) {
  Mask out = 0;
  for (std::size_t j = 0; j < plan.size(); ++j) {
    const auto& p = plan[j];
    bool side1 = false;
    switch (p.kind) {
      case Pullback::ForcedSide0: side1 = false; break;
      case Pullback::ForcedSide1: side1 = true; break;
      case Pullback::Follows: side1 = (test(omega, p.source_wall) ? 1 : 0) != p.source_side; break;
    }
    if (side1) out |= bit(static_cast<int>(j));
  }
  return out;
}

}  // namespace

MorphismCheck validate_morphism(const WallMap& m) {
  check_well_formed(m, "morphism::validate_morphism");
  const WallSpace& src = *m.source;
  std::vector<Mask> sides;
  for (const Wall& w : src.walls()) {
    sides.push_back(w.side0);
    sides.push_back(w.side1);
  }
  for (int j = 0; j < m.target->wall_count(); ++j) {
    for (int s = 0; s < 2; ++s) {
      const Mask pre = preimage(m, m.target->walls()[static_cast<std::size_t>(j)].side(s));
      if (pre == 0 || pre == src.all_points()) continue;
      if (std::find(sides.begin(), sides.end(), pre) == sides.end())
        return {false, OffendingHalfspace{j, s, pre}};
    }
  }
  return {};
}

Orientation pushforward(const WallMap& m, const Orientation& omega) {
  check_well_formed(m, "morphism::pushforward");
  if (!(*omega.space() == *m.source))
    throw Error(ErrorKind::SpaceMismatch, "morphism::pushforward", "orientation is not on the source space");
  if (!is_ultrafilter(omega))
    throw Error(ErrorKind::NotUltrafilter, "morphism::pushforward",
                "orientation " + omega.bitstring() + " is not coherent");
  return {m.target, push_bits(pullbacks(m, "morphism::pushforward"), omega.bits())};
}

std::string InducedMap::label() const {
  return is_graph_automorphism() ? "median morphism, graph automorphism" : "median morphism";
}

InducedMap induced_graph_map(const WallMap& m, const MedianGraph& source, const MedianGraph& target) {
  check_well_formed(m, "morphism::induced_graph_map");
  if (!(*source.space() == *m.source) || !(*target.space() == *m.target))
    throw Error(ErrorKind::SpaceMismatch, "morphism::induced_graph_map",
                "cubulations do not match the map's spaces");
  const auto plan = pullbacks(m, "morphism::induced_graph_map");

  InducedMap out;
  const int n = source.vertex_count();
  for (int v = 0; v < n; ++v) {
    const Mask pushed = push_bits(plan, source.bits(v));
    const auto u = target.find(pushed);
    if (!u)
      throw Error(ErrorKind::InvalidMorphism, "morphism::induced_graph_map",
                  "pushforward " + to_bitstring(pushed, target.space()->wall_count()) + " is not a vertex");
    out.image.push_back(*u);
  }

  out.commutes_with_sigma = true;
  for (int x = 0; x < m.source->point_count(); ++x)
    if (out.image[static_cast<std::size_t>(source.sigma(x))] != target.sigma(m.point_map[static_cast<std::size_t>(x)]))
      out.commutes_with_sigma = false;

  out.median_preserving = true;
  for (int a = 0; a < n && out.median_preserving; ++a)
    for (int b = a; b < n && out.median_preserving; ++b)
      for (int c = b; c < n; ++c) {
        const int lhs = out.image[static_cast<std::size_t>(median_vertex(source, a, b, c))];
        const int rhs = median_vertex(target, out.image[static_cast<std::size_t>(a)],
                                      out.image[static_cast<std::size_t>(b)], out.image[static_cast<std::size_t>(c)]);
        if (lhs != rhs) {
          out.median_preserving = false;
          break;
        }
      }

  out.adjacency_preserving = std::all_of(source.edges().begin(), source.edges().end(), [&](const LabeledEdge& e) {
    return graph_distance(target, out.image[static_cast<std::size_t>(e.u)], out.image[static_cast<std::size_t>(e.v)]) == 1;
  });

  auto sorted = out.image;
  std::sort(sorted.begin(), sorted.end());
  out.bijective = n == target.vertex_count() && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  return out;
}

namespace {

void check_generator(const WallSpace& space, const PointMap& p, std::size_t index) {
  const int n = space.point_count();
  const std::string where = "morphism::extend_action";
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  if (static_cast<int>(p.size()) != n)
    throw Error(ErrorKind::NotWallPermuting, where, "generator " + std::to_string(index) + " has the wrong length");
  for (int y : p) {
    if (y < 0 || y >= n || hit[static_cast<std::size_t>(y)])
      throw Error(ErrorKind::NotWallPermuting, where, "generator " + std::to_string(index) + " is not a bijection");
    hit[static_cast<std::size_t>(y)] = 1;
  }
  for (int i = 0; i < space.wall_count(); ++i) {
    Mask image = 0;
    for (int x : bit_indices(space.walls()[static_cast<std::size_t>(i)].side0)) image |= bit(p[static_cast<std::size_t>(x)]);
    const bool is_wall = std::any_of(space.walls().begin(), space.walls().end(),
                                     [image](const Wall& w) { return w.side0 == image || w.side1 == image; });
    if (!is_wall)
      throw Error(ErrorKind::NotWallPermuting, where,
                  "generator " + std::to_string(index) + " sends wall " + std::to_string(i) + " to a non-wall");
  }
}

}  // namespace

std::vector<InducedMap> extend_action(const GroupAction& action, const MedianGraph& g) {
  if (!action.space || !(*action.space == *g.space()))
    throw Error(ErrorKind::SpaceMismatch, "morphism::extend_action", "action and cubulation spaces differ");
  std::vector<InducedMap> out;
  for (std::size_t k = 0; k < action.generators.size(); ++k) {
    check_generator(*action.space, action.generators[k], k);
    out.push_back(induced_graph_map({action.space, action.space, action.generators[k]}, g, g));
  }
  return out;
}

VerificationReport verify_action_composition(const GroupAction& action, const MedianGraph& g,
                                             int max_word_length) {
  const auto extensions = extend_action(action, g);
  const int k = static_cast<int>(action.generators.size());
  int words = 0;
  std::vector<int> word;
  std::function<std::optional<VerificationReport>(int)> visit = [&](int length) -> std::optional<VerificationReport> {
    if (static_cast<int>(word.size()) == length) {
      PointMap point = action.generators[static_cast<std::size_t>(word.back())];
      std::vector<int> vertex = extensions[static_cast<std::size_t>(word.back())].image;
      for (int pos = length - 2; pos >= 0; --pos) {
        point = compose(action.generators[static_cast<std::size_t>(word[static_cast<std::size_t>(pos)])], point);
        vertex = compose(extensions[static_cast<std::size_t>(word[static_cast<std::size_t>(pos)])].image, vertex);
      }
      ++words;
      if (induced_graph_map({action.space, action.space, point}, g, g).image != vertex)
        return VerificationReport::fail("action-composition", word, "extension of a composed word differs");
      return std::nullopt;
    }
    for (int gen = 0; gen < k; ++gen) {
      word.push_back(gen);
      auto r = visit(length);
      word.pop_back();
      if (r) return r;
    }
    return std::nullopt;
  };
  for (int length = 2; length <= max_word_length; ++length)
    if (auto r = visit(length)) return *r;
  return VerificationReport::pass("action-composition", std::to_string(words) + " words");
}

std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> out(q.size());
  for (std::size_t x = 0; x < q.size(); ++x) out[x] = p[static_cast<std::size_t>(q[x])];
  return out;
}

int permutation_order(const std::vector<int>& p) {
  std::vector<int> identity(p.size());
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<int> power = p;
  int order = 1;
  while (power != identity) {
    power = compose(p, power);
    ++order;
  }
  return order;
}

}  // namespace wallcube
